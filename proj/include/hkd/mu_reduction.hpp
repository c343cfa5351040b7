#pragma once

#include <string>

#include "hkd/hn_data.hpp"

namespace hkd {

enum class PeelCase {
  W_equals_Vt,    // last removed block exhausted the bottom piece (or nothing was removed)
  W_strict_in_Vt  // last removal left a remainder at the same bottom slope
};

std::string to_string(PeelCase c);

// Result of peeling the kernel-bundle slope data against the generator
// filtration. vt_data keeps the flavor (plain or strong) of the input.
struct PeelResult {
  long t = 0;
  AnyHNData vt_data;
  Rational a_min_vt;
  PeelCase case_tag = PeelCase::W_equals_Vt;

  std::span<const HNPiece> vt_pieces() const {
    return std::visit([](const auto& d) { return d.pieces(); }, vt_data);
  }
};

// Walk the generator filtration from the bottom. At step i the comparison
// slope is sigma_i = (1 - dtilde_{l1-i}) * d with block rank s_i, the
// multiplicity of that generator degree. A bottom slope below sigma_i stops
// the walk (t = i); equality removes s_i ranks from the bottom piece; a
// bottom slope above sigma_i is inconsistent input. Stops strictly before the
// filtration length for every validated input.
PeelResult peel_mu_reduction(const SyzygyInput& input);

// Exposed for tests: peel raw pieces without the syzygy degree/rank check.
PeelResult peel_pieces(std::span<const HNPiece> v0, const GeneratorDegrees& degrees,
                       const CurveData& curve, const AnyHNData* rebuild_like = nullptr);

// Slope data of the partial generator sum M_t (the top l1 - t distinct
// degrees), the quotient target of the peeled kernel bundle.
HNData generator_bundle_tail(const GeneratorDegrees& degrees, const CurveData& curve, long t);

// F-threshold of the pair from strong slope data: 1 - a_min(V_t)/d.
Rational threshold_alpha(const SyzygyInput& input);

// Characteristic-0 analysis: the limit threshold 1 - mu_min(V_t)/d, which of
// V_t / V_{t-1} controls the large-p behavior, and the shape the finite-p
// threshold must take.
struct AlphaInfinityReport {
  Rational alpha_infinity;
  long t = 0;
  long controlling_index = 0;
  std::string predicted_cp_form;
};
AlphaInfinityReport alpha_infinity_report(const SyzygyInput& input);

// Decomposition of c_p - c_inf as a/(p*b) with gcd(a, p) = 1, plus the
// denominator checks: p divides the reduced denominator of c_p, and
// a/b <= 4*(g-1)*(r-1).
struct DenominatorReport {
  bool equality = false;
  Rational residual;
  Integer a;
  Integer b;
  bool gcd_ok = false;
  bool bound_ok = false;
  Integer cp_denominator;
  long cp_denominator_p_valuation = 0;
};
DenominatorReport threshold_denominator_report(const Rational& c_p, const Rational& c_inf,
                                   const Integer& p, long genus, long rank);

// Closed-form threshold of the Klein-type family
//   h = x^(d-1) y + y^(d-1) z + z^(d-1) x,  I = (x, y, z):
//   (3pd + d^2 - 9d + 15) / (2pd)
// valid for odd d >= 17 and primes p >= d^2 with p = +-2 mod (d^2 - 3d + 3).
Rational klein_threshold(long d, const Integer& p);
Rational klein_threshold_unchecked(long d, const Integer& p);
std::vector<std::string> klein_parameter_problems(long d, const Integer& p);

}  // namespace hkd
