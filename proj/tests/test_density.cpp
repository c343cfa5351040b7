#include <doctest.h>

#include "hkd/density.hpp"
#include "hkd/mu_reduction.hpp"

using namespace hkd;

namespace {

SyzygyInput two_gen_input(long d) {
  // degrees {2,2,5} with kernel data ({-3d, -4d}, {1,1}), valid for every d
  return validate_syzygy_hn(
      StrongHNData({{Rational(-3 * d), 1}, {Rational(-4 * d), 1}}, 3, 0),
      GeneratorDegrees({2, 2, 5}), CurveData(3, d));
}

}  // namespace

TEST_CASE("closed-form densities of the two-generator-degree example, for several d") {
  for (long d : {4L, 5L, 7L, 12L}) {
    CAPTURE(d);
    const SyzygyInput input = two_gen_input(d);
    const CurveData curve = input.curve();

    // f_V = d(9-2x) below 4, d(5-x) on [4,5), then 0
    const PiecewiseLinear fv = density_of_bundle(input.strong_v0(), curve);
    const PiecewiseLinear fv_expected(
        {Rational(4), Rational(5)},
        {{Rational(-2 * d), Rational(9 * d)}, {Rational(-d), Rational(5 * d)},
         {Rational(0), Rational(0)}});
    CHECK(fv == fv_expected);

    // f_M = 3d(3-x) below 2, d(5-x) on [2,5), then 0
    const StrongHNData m0 = strong_hn_of_generator_degrees(input.degrees(), curve, 3);
    const PiecewiseLinear fm = density_of_bundle(m0, curve);
    const PiecewiseLinear fm_expected(
        {Rational(2), Rational(5)},
        {{Rational(-3 * d), Rational(9 * d)}, {Rational(-d), Rational(5 * d)},
         {Rational(0), Rational(0)}});
    CHECK(fm == fm_expected);

    // pair density: dx on [0,2), d(4-x) on [2,4), then 0
    const PiecewiseLinear pair = pair_density(input);
    const PiecewiseLinear pair_expected(
        {Rational(2), Rational(4)},
        {{Rational(d), Rational(0)}, {Rational(-d), Rational(4 * d)},
         {Rational(0), Rational(0)}},
        Rational(0));
    CHECK(pair == pair_expected);

    CHECK(support_endpoint(input.strong_v0(), curve) == Rational(5));
    CHECK(threshold_alpha(input) == Rational(4));
    CHECK(integrate(pair) == Rational(4 * d));
  }
}

TEST_CASE("density difference rejects data dipping below the generator density") {
  const CurveData curve(3, 4);
  const GeneratorDegrees degs({2, 2, 5});
  const StrongHNData m0 = strong_hn_of_generator_degrees(degs, curve, 3);
  const StrongHNData low({{Rational(-4), 2}}, 3, 0);
  CHECK_THROWS_AS(density_difference(low, m0, curve), ValidationError);
}

TEST_CASE("cohomology bounds for twisted semistable bundles") {
  const CurveData curve(3, 4);

  // negative twisted slope: exact Riemann-Roch value r*(-mu_twisted + g - 1)
  const H1Bounds neg = h1_semistable(Rational(-16), 1, 0, curve);
  CHECK(neg.exact());
  CHECK(neg.lower == Rational(18));
  const H1Bounds neg2 = h1_semistable(Rational(-16), 2, 3, curve);  // twisted slope -4
  CHECK(neg2.exact());
  CHECK(neg2.lower == Rational(12));  // 2 * (4 + 2)

  // slope window [0, d(d-3)]: only the coarse band [0, r(g-1)]
  const H1Bounds mid = h1_semistable(Rational(-16), 1, 4, curve);  // twisted slope 0
  CHECK_FALSE(mid.exact());
  CHECK(mid.lower == Rational(0));
  CHECK(mid.upper == Rational(2));
  const H1Bounds edge = h1_semistable(Rational(-16), 1, 5, curve);  // slope d(d-3) = 4
  CHECK(edge.upper == Rational(2));

  // past the window: exactly zero
  const H1Bounds high = h1_semistable(Rational(-16), 1, 6, curve);
  CHECK(high.exact());
  CHECK(high.lower == Rational(0));

  // genus 0 pinches the window shut
  const H1Bounds rational_curve = h1_semistable(Rational(0), 3, 0, CurveData(0, 4));
  CHECK(rational_curve.exact());
  CHECK(rational_curve.upper == Rational(0));

  CHECK_THROWS_AS(h1_semistable(Rational(0), 0, 0, curve), ValidationError);
}

TEST_CASE("finite-level envelope geometry") {
  const SyzygyInput input = two_gen_input(4);
  const CurveData curve = input.curve();
  const StrongHNData& v0 = input.strong_v0();
  const PiecewiseLinear f = density_of_bundle(v0, curve);

  const EnvelopePair env = finite_level_envelope(v0, curve, 1);
  CHECK(env.level == 1);
  CHECK(env.witness_level == 0);
  CHECK(env.grid == 3);

  const Rational W(4, 3);  // rank 2 * (g-1) = 2, over grid 3
  // far from the corners at 4 and 5 the band has half-width W
  for (const Rational& x : {Rational(0), Rational(2), Rational(100)}) {
    CHECK(env.upper.value(x) - f.value(x) == W);
    CHECK(f.value(x) - env.lower.value(x) == W);
  }
  // inside a corner window the band doubles
  const Rational inside = Rational(4) + Rational(1, 6);
  CHECK(env.upper.value(inside) - f.value(inside) == W * 2);

  // genus <= 1 collapses the band to the function itself
  const StrongHNData small({{Rational(-8), 2}}, 3, 0);
  const EnvelopePair tight = finite_level_envelope(small, CurveData(1, 4), 2);
  CHECK(tight.lower == tight.upper);

  CHECK_THROWS_AS(finite_level_envelope(v0, curve, -1), ValidationError);
}

TEST_CASE("envelope respects the witness level of the data") {
  const StrongHNData refined({{Rational(-4, 3), 1}, {Rational(-8, 3), 1}}, 3, 1);
  const EnvelopePair env = finite_level_envelope(refined, CurveData(3, 4), 2);
  CHECK(env.witness_level == 1);
  CHECK(env.level == 2);
  CHECK(env.grid == 27);  // p^(level + witness)
}

TEST_CASE("pair envelope brackets the pair density") {
  const SyzygyInput input = two_gen_input(4);
  const PiecewiseLinear pair = pair_density(input);
  const EnvelopePair env = pair_envelope(input, 2);
  CHECK(env.grid == 9);
  // the lower band may dip below zero near the corners; that only makes it a
  // weaker (still valid) bound for the nonnegative samples
  for (long i = 0; i <= 60; ++i) {
    const Rational x(i, 10);
    CHECK(env.lower.value(x) <= pair.value(x));
    CHECK(pair.value(x) <= env.upper.value(x));
  }
}
