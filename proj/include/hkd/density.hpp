#pragma once

#include "hkd/hn_data.hpp"
#include "hkd/piecewise.hpp"

namespace hkd {

// Limit density of a bundle with the given Frobenius-stable slope data:
//   f(x) = sum over pieces of  rank * d * max(0, (1 - slope/d) - x),
// a sum of descending hinge functions with corners at 1 - slope/d.
// Defined on all of R; callers clip to [0, inf) where needed.
PiecewiseLinear density_of_bundle(const StrongHNData& data, const CurveData& curve);

// Right end of the support: 1 - mu_min/d, the largest hinge corner.
Rational support_endpoint(const StrongHNData& data, const CurveData& curve);

// Density of the quotient pair: density(V0) - density(M0) clipped to
// [0, inf), where M0 is the generator line-bundle sum. Rejects inputs whose
// difference dips below zero anywhere on [0, inf).
PiecewiseLinear pair_density(const SyzygyInput& input);

// density(v) - density(m) clipped to [0, inf), with the nonnegativity check.
PiecewiseLinear density_difference(const StrongHNData& v, const StrongHNData& m,
                                   const CurveData& curve);

// Cohomology bounds for a twist of a semistable bundle of slope mu and rank r
// on the curve: exact Riemann-Roch value r*(-mu - d*m + (g-1)) while the
// twisted slope is negative, an exact zero once the twisted slope clears
// d*(d-3), and the window [0, r*(g-1)] in between. lower == upper means exact.
struct H1Bounds {
  Rational lower;
  Rational upper;
  bool exact() const { return lower == upper; }
};
H1Bounds h1_semistable(const Rational& mu, long rank, long twist, const CurveData& curve);

// Band that contains both the limit density and the level-(n + witness)
// finite approximation: f +- W away from hinge corners and f +- 2W on ramped
// windows of width (d-3)/(q*q1) at the corners, W = rank*(g-1)/(q*q1).
struct EnvelopePair {
  PiecewiseLinear lower;
  PiecewiseLinear upper;
  long level = 0;          // n: Frobenius steps beyond the witnessing level
  long witness_level = 0;  // q1 = p^witness_level from the input data
  Integer grid;            // q * q1 = p^(level + witness_level)
};

EnvelopePair finite_level_envelope(const StrongHNData& data, const CurveData& curve, long level);

// Envelope for the pair density at total Frobenius level n + v0 witness level:
// the V-envelope minus the M-envelope, interval-style, clipped to [0, inf).
EnvelopePair pair_envelope(const SyzygyInput& input, long level);

}  // namespace hkd
