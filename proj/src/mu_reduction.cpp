#include "hkd/mu_reduction.hpp"

#include <algorithm>

namespace hkd {

std::string to_string(PeelCase c) {
  return c == PeelCase::W_equals_Vt ? "W_equals_Vt" : "W_strict_in_Vt";
}

namespace {

AnyHNData rebuild(std::vector<HNPiece> pieces, const AnyHNData* like) {
  if (like && std::holds_alternative<StrongHNData>(*like)) {
    const auto& s = std::get<StrongHNData>(*like);
    return StrongHNData(std::move(pieces), s.characteristic(), s.frobenius_level());
  }
  return HNData(std::move(pieces));
}

}  // namespace

PeelResult peel_pieces(std::span<const HNPiece> v0, const GeneratorDegrees& degrees,
                       const CurveData& curve, const AnyHNData* rebuild_like) {
  validate_pieces(v0);
  const Rational d(Integer(curve.polarization_degree));
  const auto& distinct = degrees.distinct();
  const long l1 = static_cast<long>(distinct.size());

  std::vector<HNPiece> work(v0.begin(), v0.end());
  std::vector<HNPiece> last_nonzero = work;
  PeelCase tag = PeelCase::W_equals_Vt;

  for (long i = 0; i < l1; ++i) {
    const auto& [deg, mult] = distinct[l1 - 1 - i];
    const Rational sigma = Rational(Integer(1 - deg)) * d;

    if (work.empty()) {
      // Only reachable when what is left of the generator sum is a single
      // line bundle; anything else means the claimed data never matched.
      long remaining_rank = 0;
      for (long j = 0; j < l1 - i; ++j) remaining_rank += distinct[j].second;
      if (remaining_rank != 1)
        throw ValidationError(
            "peel: slope data exhausted while the remaining generator sum has rank " +
            std::to_string(remaining_rank));
      PeelResult result{i - 1, rebuild(last_nonzero, rebuild_like),
                        last_nonzero.back().slope, tag};
      return result;
    }

    HNPiece& bottom = work.back();
    if (bottom.slope < sigma)
      return PeelResult{i, rebuild(work, rebuild_like), bottom.slope, tag};
    if (bottom.slope > sigma)
      throw ValidationError("peel: bottom slope " + bottom.slope.to_string() +
                            " exceeds the generator slope " + sigma.to_string() +
                            " at step " + std::to_string(i));
    if (bottom.rank < mult)
      throw ValidationError("peel: bottom piece rank " + std::to_string(bottom.rank) +
                            " is smaller than the generator block rank " +
                            std::to_string(mult) + " at step " + std::to_string(i));
    last_nonzero = work;
    if (bottom.rank == mult) {
      tag = PeelCase::W_equals_Vt;
      work.pop_back();
    } else {
      tag = PeelCase::W_strict_in_Vt;
      bottom.rank -= mult;
    }
  }
  throw ValidationError("peel: no reduction found within the generator filtration");
}

PeelResult peel_mu_reduction(const SyzygyInput& input) {
  return peel_pieces(input.v0_pieces(), input.degrees(), input.curve(), &input.v0());
}

HNData generator_bundle_tail(const GeneratorDegrees& degrees, const CurveData& curve, long t) {
  const auto& distinct = degrees.distinct();
  const long l1 = static_cast<long>(distinct.size());
  if (t < 0 || t >= l1)
    throw ValidationError("generator_bundle_tail: index out of range");
  const Rational d(Integer(curve.polarization_degree));
  std::vector<HNPiece> pieces;
  for (long j = 0; j < l1 - t; ++j)
    pieces.push_back({Rational(Integer(1 - distinct[j].first)) * d, distinct[j].second});
  return HNData(std::move(pieces));
}

Rational threshold_alpha(const SyzygyInput& input) {
  (void)input.strong_v0();  // characteristic-p data required
  const PeelResult peel = peel_mu_reduction(input);
  const Rational d(Integer(input.curve().polarization_degree));
  return Rational(1) - peel.a_min_vt / d;
}

AlphaInfinityReport alpha_infinity_report(const SyzygyInput& input) {
  (void)input.plain_v0();  // characteristic-0 data required
  const PeelResult peel = peel_mu_reduction(input);
  const Rational d(Integer(input.curve().polarization_degree));
  AlphaInfinityReport report;
  report.alpha_infinity = Rational(1) - peel.a_min_vt / d;
  report.t = peel.t;
  // A jump in the bottom slope at the final step means the peeled bundle
  // itself controls reductions mod p; a kept remainder means the previous one does.
  report.controlling_index =
      (peel.case_tag == PeelCase::W_equals_Vt) ? peel.t : peel.t - 1;
  report.predicted_cp_form =
      "for p >> 0: c_p = 1 - a_min(V_t^(p))/d >= " + report.alpha_infinity.to_string() +
      " = c_inf, with equality exactly when the controlling bundle (V_" +
      std::to_string(report.controlling_index) +
      ") stays strongly semistable mod p; otherwise c_p = c_inf + a/(p*b) with gcd(a, p) = 1";
  return report;
}

DenominatorReport threshold_denominator_report(const Rational& c_p, const Rational& c_inf,
                                   const Integer& p, long genus, long rank) {
  if (!is_prime(p)) throw ValidationError("threshold_denominator_report: p must be prime");
  DenominatorReport report;
  report.residual = c_p - c_inf;
  if (report.residual.sign() < 0)
    throw ValidationError("threshold_denominator_report: c_p < c_inf (residual negative)");
  report.cp_denominator = c_p.den();
  report.cp_denominator_p_valuation = p_valuation(report.cp_denominator, p).first;
  if (report.residual.sign() == 0) {
    report.equality = true;
    report.a = 0;
    report.b = 1;
    report.gcd_ok = true;
    report.bound_ok = true;
    return report;
  }
  const Integer den = report.residual.den();
  const auto [val, cofactor] = p_valuation(den, p);
  report.a = report.residual.num();
  if (val >= 1) {
    report.b = den / p;
    report.gcd_ok = gcd(report.a, p) == 1;
  } else {
    report.b = den;  // not expressible as a/(p*b); reported as is
    report.gcd_ok = false;
  }
  const Rational bound(Integer(4 * std::max(genus - 1, 0L) * std::max(rank - 1, 0L)));
  report.bound_ok = Rational(report.a, report.b) <= bound;
  return report;
}

std::vector<std::string> klein_parameter_problems(long d, const Integer& p) {
  std::vector<std::string> problems;
  if (d < 17 || d % 2 == 0)
    problems.push_back("d must be odd and >= 17 (got " + std::to_string(d) + ")");
  if (!is_prime(p)) problems.push_back("p must be prime (got " + p.get_str() + ")");
  if (p < Integer(d) * Integer(d))
    problems.push_back("p must be >= d^2 = " + std::to_string(d * d));
  const Integer modulus = Integer(d) * Integer(d) - 3 * Integer(d) + 3;
  const Integer residue = p % modulus;
  if (residue != 2 && residue != modulus - 2)
    problems.push_back("p must be congruent to +-2 mod d^2 - 3d + 3 = " + modulus.get_str());
  return problems;
}

Rational klein_threshold_unchecked(long d, const Integer& p) {
  const Integer D(d);
  return Rational(3 * p * D + D * D - 9 * D + 15, 2 * p * D);
}

Rational klein_threshold(long d, const Integer& p) {
  const auto problems = klein_parameter_problems(d, p);
  if (!problems.empty()) {
    std::string msg = "klein_threshold:";
    for (const auto& s : problems) msg += " " + s + ";";
    throw ValidationError(msg);
  }
  return klein_threshold_unchecked(d, p);
}

}  // namespace hkd
