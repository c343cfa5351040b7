#include <doctest.h>

#include "hkd/groebner.hpp"
#include "hkd/linalg.hpp"

using namespace hkd;

namespace {

const PrimeField F3(3);

std::vector<Poly> parse_all(const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(Poly::parse(t, F3));
  return out;
}

}  // namespace

TEST_CASE("monomial ideals need no new elements") {
  const GroebnerBasis gb = buchberger_truncated(parse_all({"x^2", "y^2"}), 10);
  CHECK(gb.basis.size() == 2);
  CHECK(gb.truncation == 10);
  // standard monomials x^a y^b z^c with a,b <= 1: four for every m >= 2
  CHECK(standard_monomial_count(gb, 0) == 1);
  CHECK(standard_monomial_count(gb, 1) == 3);
  CHECK(standard_monomial_count(gb, 2) == 4);
  CHECK(standard_monomial_count(gb, 10) == 4);
  CHECK(standard_monomial_count(gb, -1) == 0);
  CHECK_THROWS_AS(standard_monomial_count(gb, 11), ValidationError);
  CHECK(spoly_self_check(gb));
}

TEST_CASE("buchberger resolves lead-term collisions") {
  // (xy - z^2, x^2 - yz): the S-pair produces a new degree-3 lead
  const GroebnerBasis gb =
      buchberger_truncated(parse_all({"x*y - z^2", "x^2 - y*z"}), 12);
  CHECK(gb.basis.size() >= 3);
  CHECK(spoly_self_check(gb));
  // every original generator reduces to zero
  for (const auto& g : parse_all({"x*y - z^2", "x^2 - y*z"}))
    CHECK(normal_form(g, gb.basis).is_zero());
  // ideal membership up to the truncation: x*(xy - z^2) - y*(x^2 - yz)
  const Poly combo = Poly::parse("y^2*z - x*z^2", F3);
  CHECK(normal_form(combo, gb.basis).is_zero());
  CHECK_FALSE(normal_form(Poly::parse("x^3", F3), gb.basis).is_zero());
}

TEST_CASE("normal form reduces largest terms first") {
  const GroebnerBasis gb = buchberger_truncated(parse_all({"x^2", "y^2"}), 8);
  const Poly f = Poly::parse("x^2*y + x*y^2 + x*y*z", F3);
  CHECK(normal_form(f, gb.basis) == Poly::parse("x*y*z", F3));
  CHECK(normal_form(Poly(F3), gb.basis).is_zero());
}

TEST_CASE("truncation bookkeeping") {
  CHECK_THROWS_AS(buchberger_truncated(parse_all({"x^2"}), 0), ValidationError);
  CHECK_THROWS_AS(buchberger_truncated({}, 5), ValidationError);
  CHECK_THROWS_AS(buchberger_truncated({Poly(F3)}, 5), ValidationError);
  // all generators above the bound: nothing usable survives
  CHECK_THROWS_AS(buchberger_truncated(parse_all({"z^5"}), 3), ValidationError);
  // mixed: the low generator is kept, the high one dropped
  const GroebnerBasis gb = buchberger_truncated(parse_all({"x^2", "z^5"}), 3);
  CHECK(gb.basis.size() == 1);
  CHECK(standard_monomial_count(gb, 3) == monomial_count(3) - monomial_count(1));
}

TEST_CASE("groebner counts match row reduction on the curve quotient") {
  const Poly h = Poly::parse("x^5+y^5+z^5", F3);
  const GradedRankEngine engine(h);
  const std::vector<Poly> gens = parse_all({"x^6", "y^6", "z^15"});

  std::vector<Poly> all{h};
  all.insert(all.end(), gens.begin(), gens.end());
  const GroebnerBasis gb = buchberger_truncated(all, 20);
  CHECK(spoly_self_check(gb));
  for (long m = 0; m <= 20; ++m) {
    CAPTURE(m);
    CHECK(standard_monomial_count(gb, m) == engine.quotient_dim(gens, m));
  }
  // frozen spot values
  CHECK(standard_monomial_count(gb, 5) == 20);
  CHECK(standard_monomial_count(gb, 6) == 23);
}
