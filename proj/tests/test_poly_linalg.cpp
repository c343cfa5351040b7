#include <doctest.h>

#include <algorithm>

#include "hkd/linalg.hpp"
#include "hkd/poly.hpp"

using namespace hkd;

TEST_CASE("prime field arithmetic") {
  const PrimeField F(7);
  CHECK(F.normalize(-1) == 6);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.neg(0) == 0);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.mul(F.inv(4), 4) == 1);
  CHECK_THROWS_AS(F.inv(0), ValidationError);
  CHECK_THROWS_AS(PrimeField(6), ValidationError);
}

TEST_CASE("degrevlex order with x > y > z") {
  const Mono x2{{2, 0, 0}}, xy{{1, 1, 0}}, y2{{0, 2, 0}}, xz{{1, 0, 1}},
      yz{{0, 1, 1}}, z2{{0, 0, 2}};
  const std::vector<Mono> expected{x2, xy, y2, xz, yz, z2};
  std::vector<Mono> sorted = {z2, xz, y2, x2, yz, xy};
  std::sort(sorted.begin(), sorted.end(), drl_greater);
  CHECK(sorted == expected);
  CHECK(drl_greater(Mono{{0, 0, 3}}, z2));     // higher degree wins
  CHECK_FALSE(drl_greater(x2, x2));
}

TEST_CASE("polynomial parsing") {
  const PrimeField F(3);
  const Poly f = Poly::parse("x^5+y^5+z^5", F);
  CHECK(f.degree() == 5);
  CHECK(f.terms().size() == 3);
  CHECK(f.lead().m == Mono{{5, 0, 0}});

  const Poly g = Poly::parse("x^2+2*x*y+y^2", F);
  CHECK(g == Poly::parse("x*x - x*y + y^2", F));  // 2 = -1 mod 3
  CHECK(Poly::parse("3*x", F).is_zero());
  CHECK(Poly::parse("x - x", F).is_zero());

  CHECK_THROWS_AS(Poly::parse("", F), ValidationError);
  CHECK_THROWS_AS(Poly::parse("2xy", F), ValidationError);  // juxtaposition needs '*'
  CHECK_THROWS_AS(Poly::parse("w^2", F), ValidationError);

  const Poly h = Poly::parse("a^2 + b*c", F, {"a", "b", "c"});
  CHECK(h.to_string({"a", "b", "c"}) == "a^2 + b*c");
}

TEST_CASE("polynomial arithmetic") {
  const PrimeField F(3);
  const Poly x = Poly::parse("x", F), y = Poly::parse("y", F);
  const Poly s = x + y;
  CHECK(s * s == Poly::parse("x^2+2*x*y+y^2", F));
  CHECK(s - s == Poly(F));
  CHECK(s.pow(3) == Poly::parse("x^3+y^3", F));  // freshman's dream
  CHECK(s.scaled(2) == Poly::parse("2*x+2*y", F));
  CHECK(s.times_monomial(Mono{{0, 0, 2}}, 1) == Poly::parse("x*z^2+y*z^2", F));
  CHECK(Poly::parse("2*x^2", F).monic() == Poly::parse("x^2", F));
}

TEST_CASE("exponent scaling matches Frobenius powers") {
  const PrimeField F(3);
  const Poly f = Poly::parse("x^2+2*x*y+y^2", F);
  CHECK(f.exponent_scaled(3) == f.pow(3));
  CHECK(f.exponent_scaled(1) == f);
  const Poly g = Poly::parse("x+y+z", F);
  CHECK(g.exponent_scaled(9) == g.pow(9));
}

TEST_CASE("partial derivatives") {
  const PrimeField F(3);
  const Poly h = Poly::parse("x^5+y^5+z^5", F);
  CHECK(partial_derivative(h, 0) == Poly::parse("2*x^4", F));
  CHECK(partial_derivative(Poly::parse("x^3", F), 0).is_zero());  // 3 = 0 mod 3
  CHECK(partial_derivative(Poly::parse("x*y^2", F), 1) == Poly::parse("2*x*y", F));
  CHECK_THROWS_AS(partial_derivative(h, 3), ValidationError);
}

TEST_CASE("monomial table enumerates a degree in order") {
  const MonoTable table(3);
  CHECK(table.size() == 10);  // C(5,2)
  CHECK(table.mono(0) == Mono{{3, 0, 0}});
  CHECK(table.mono(9) == Mono{{0, 0, 3}});
  for (size_t i = 0; i + 1 < table.size(); ++i)
    CHECK(drl_greater(table.mono(i), table.mono(i + 1)));
  for (size_t i = 0; i < table.size(); ++i)
    CHECK(table.index(table.mono(i)) == i);
  CHECK(monomial_count(3) == 10);
  CHECK(monomial_count(-1) == 0);
  CHECK(monomial_count(0) == 1);
}

TEST_CASE("graded quotient dimensions by row reduction") {
  const PrimeField F(3);
  const Poly h = Poly::parse("x^5+y^5+z^5", F);
  const GradedRankEngine engine(h);

  // dim (P/(h))_m = C(m+2,2) - C(m-3,2)
  CHECK(engine.ring_dim(4) == 15);
  CHECK(engine.ring_dim(5) == 20);
  CHECK(engine.ring_dim(6) == 25);
  CHECK(engine.ring_dim(60) == monomial_count(60) - monomial_count(55));

  // frozen values for I = (x^6, y^6, z^15): nothing of degree <= 6 except x^6, y^6
  const std::vector<Poly> gens{Poly::parse("x^6", F), Poly::parse("y^6", F),
                               Poly::parse("z^15", F)};
  CHECK(engine.quotient_dim(gens, 5) == 20);
  CHECK(engine.quotient_dim(gens, 6) == 23);
  CHECK(engine.quotient_dim(gens, 0) == 1);
  CHECK(engine.quotient_dim({}, 6) == 25);

  // the maximal ideal kills every positive degree
  const std::vector<Poly> linear{Poly::parse("x", F), Poly::parse("y", F),
                                 Poly::parse("z", F)};
  CHECK(engine.quotient_dim(linear, 1) == 0);
  CHECK(engine.quotient_dim(linear, 7) == 0);
}
