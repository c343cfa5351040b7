#pragma once

// Randomized peel fixtures used by both the unit tests and the acceptance
// runner. A case is built backwards: pick the generator filtration and the
// intended stopping state, then reassemble the slope data the peel must
// consume to land exactly there.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hkd/hn_data.hpp"
#include "hkd/mu_reduction.hpp"

namespace hkd::testgen {

struct BuiltCase {
  SyzygyInput input;  // strong slope data at witness level 0
  long t = 0;
  PeelCase tag = PeelCase::W_equals_Vt;
  Rational a_min;
  std::vector<HNPiece> vt;
};

// One attempt; empty when the drawn shape admits no consistent slope data.
inline std::optional<BuiltCase> try_build_case(std::mt19937_64& rng) {
  const auto pick = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };

  const long l1 = pick(1, 4);
  std::vector<long> delta(l1);
  std::vector<long> mult(l1);
  delta[0] = pick(1, 3);
  for (long j = 1; j < l1; ++j) delta[j] = delta[j - 1] + pick(1, 3);
  long mu = 0;
  for (long j = 0; j < l1; ++j) mu += mult[j] = pick(1, 3);
  if (mu < 2) return std::nullopt;

  const long d = pick(2, 9);
  const long g = pick(0, 5);
  const long rank = mu - 1;

  std::vector<long> sigma(l1);  // slope of the degree-delta[j] generator block
  long total_degree = -d;
  for (long j = 0; j < l1; ++j) {
    sigma[j] = (1 - delta[j]) * d;
    total_degree += mult[j] * sigma[j];
  }

  const long t0 = pick(0, l1 - 1);
  long consumed_rank = 0;
  long consumed_degree = 0;
  for (long i = 0; i < t0; ++i) {
    const long j = l1 - 1 - i;
    consumed_rank += mult[j];
    consumed_degree += mult[j] * sigma[j];
  }
  const long remaining = rank - consumed_rank;
  if (remaining < 1) return std::nullopt;

  const bool keep_remainder = t0 >= 1 && (rng() & 1) != 0;

  Rational bottom_slope;
  long bottom_rank = 0;
  if (keep_remainder) {
    bottom_slope = Rational(sigma[l1 - t0]);
    bottom_rank = pick(1, std::min(remaining, 2L));
  } else if (t0 == 0) {
    bottom_slope = Rational(sigma[l1 - 1] - pick(1, 5));
    bottom_rank = 1;
  } else {
    const long lo = sigma[l1 - t0];      // last consumed block, exclusive
    const long hi = sigma[l1 - 1 - t0];  // next comparison slope, exclusive
    if (hi - lo < 2) return std::nullopt;
    bottom_slope = Rational(pick(lo + 1, hi - 1));
    bottom_rank = 1;
  }

  const long top_rank = remaining - bottom_rank;
  const Rational top_degree =
      Rational(total_degree - consumed_degree) - bottom_slope * Rational(bottom_rank);
  std::vector<HNPiece> vt;
  if (top_rank > 0) {
    const Rational top_slope = top_degree / Rational(top_rank);
    if (!(top_slope > bottom_slope)) return std::nullopt;
    vt.push_back({top_slope, top_rank});
  } else if (top_degree != Rational(0)) {
    return std::nullopt;
  }
  vt.push_back({bottom_slope, bottom_rank});

  std::vector<HNPiece> v0 = vt;
  long first_appended = l1 - t0;
  if (keep_remainder) {
    v0.back().rank += mult[l1 - t0];  // remainder sits inside the consumed block
    first_appended += 1;
  }
  for (long j = first_appended; j < l1; ++j)
    v0.push_back({Rational(sigma[j]), mult[j]});

  std::vector<long> degrees;
  for (long j = 0; j < l1; ++j)
    degrees.insert(degrees.end(), mult[j], delta[j]);

  BuiltCase built{
      validate_syzygy_hn(StrongHNData(std::move(v0), 3, 0), GeneratorDegrees(degrees),
                         CurveData(g, d)),
      t0,
      keep_remainder ? PeelCase::W_strict_in_Vt : PeelCase::W_equals_Vt,
      bottom_slope,
      std::move(vt)};
  return built;
}

inline BuiltCase build_case(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    if (auto built = try_build_case(rng)) return *std::move(built);
  }
  throw InvariantViolation("case generator: no valid case in 500 attempts");
}

// Variant with every slope an integer, so the pieces can be split into
// strong refinements with controlled perturbations.
inline BuiltCase build_integer_case(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    auto built = try_build_case(rng);
    if (!built) continue;
    bool integral = true;
    for (const auto& piece : built->input.v0_pieces())
      integral = integral && piece.slope.is_integer();
    if (integral) return *std::move(built);
  }
  throw InvariantViolation("case generator: no integer-slope case in 2000 attempts");
}

// Split some rank >= 2 pieces of integer-slope data into two sub-slopes
// mu +- 1/(3r_i) with matching total degree: a strong refinement at
// Frobenius level 1 of the same characteristic-0 data. Integer slopes are at
// distance >= 1, the perturbations stay below 1/3, so descent is preserved.
inline StrongHNData refine_at_level_one(std::span<const HNPiece> pieces,
                                        std::mt19937_64& rng) {
  std::vector<HNPiece> refined;
  for (const auto& piece : pieces) {
    if (piece.rank >= 2 && (rng() & 1) != 0) {
      const long r1 = 1 + static_cast<long>(rng() % static_cast<uint64_t>(piece.rank - 1));
      const long r2 = piece.rank - r1;
      refined.push_back({piece.slope + Rational(1, 3 * r1), r1});
      refined.push_back({piece.slope - Rational(1, 3 * r2), r2});
    } else {
      refined.push_back(piece);
    }
  }
  return StrongHNData(std::move(refined), 3, 1);
}

}  // namespace hkd::testgen
