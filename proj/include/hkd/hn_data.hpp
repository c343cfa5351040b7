#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hkd/rational.hpp"

namespace hkd {

// Smooth projective curve together with the degree of the chosen very ample
// line bundle. All slopes below are measured against this polarization.
struct CurveData {
  long genus = 0;
  long polarization_degree = 1;

  CurveData(long g, long d) : genus(g), polarization_degree(d) {
    if (g < 0) throw ValidationError("CurveData: genus must be >= 0");
    if (d < 1) throw ValidationError("CurveData: polarization degree must be >= 1");
  }
};

struct HNPiece {
  Rational slope;
  long rank = 0;
  friend bool operator==(const HNPiece&, const HNPiece&) = default;
};

void validate_pieces(std::span<const HNPiece> pieces);

// Harder-Narasimhan slope data: successive quotient slopes (strictly
// decreasing) with their ranks. Plain data carries no characteristic and is
// also the shape used for characteristic-0 input.
class HNData {
public:
  explicit HNData(std::vector<HNPiece> pieces) : pieces_(std::move(pieces)) {
    validate_pieces(pieces_);
  }
  std::span<const HNPiece> pieces() const { return pieces_; }
  friend bool operator==(const HNData&, const HNData&) = default;

private:
  std::vector<HNPiece> pieces_;
};

// Slope data of a Frobenius-stabilized filtration: slopes are the quotient
// slopes of the level-m Frobenius pullback divided by p^m. Each piece must
// contribute an integral degree at the witnessing level, i.e.
// slope * p^level * rank is an integer.
class StrongHNData {
public:
  StrongHNData(std::vector<HNPiece> pieces, Integer characteristic, long frobenius_level);

  std::span<const HNPiece> pieces() const { return pieces_; }
  const Integer& characteristic() const { return characteristic_; }
  long frobenius_level() const { return frobenius_level_; }
  friend bool operator==(const StrongHNData&, const StrongHNData&) = default;

private:
  std::vector<HNPiece> pieces_;
  Integer characteristic_;
  long frobenius_level_ = 0;
};

// Degrees of a homogeneous generating set, stored sorted ascending.
class GeneratorDegrees {
public:
  explicit GeneratorDegrees(std::vector<long> degrees);

  const std::vector<long>& degrees() const { return degrees_; }
  long mu() const { return static_cast<long>(degrees_.size()); }
  // (distinct degree, multiplicity), ascending by degree.
  const std::vector<std::pair<long, long>>& distinct() const { return distinct_; }
  friend bool operator==(const GeneratorDegrees&, const GeneratorDegrees&) = default;

private:
  std::vector<long> degrees_;
  std::vector<std::pair<long, long>> distinct_;
};

struct BundleStats {
  long rank = 0;
  Rational degree;
  Rational mu_max;
  Rational mu_min;
};

BundleStats bundle_stats(std::span<const HNPiece> pieces);
inline BundleStats bundle_stats(const HNData& d) { return bundle_stats(d.pieces()); }
inline BundleStats bundle_stats(const StrongHNData& d) { return bundle_stats(d.pieces()); }

// Slope data of the direct sum of line bundles O(1 - d_i): one piece per
// distinct generator degree, slope (1 - d)*deg(X), rank its multiplicity.
// Being a sum of line bundles the same data is Frobenius-stable as is.
HNData hn_of_generator_degrees(const GeneratorDegrees& degrees, const CurveData& curve);
StrongHNData strong_hn_of_generator_degrees(const GeneratorDegrees& degrees,
                                            const CurveData& curve,
                                            const Integer& characteristic);

// Scale every slope by p^extra_level and bump the witnessing level.
StrongHNData frobenius_pullback(const StrongHNData& data, long extra_level);

using AnyHNData = std::variant<HNData, StrongHNData>;

// A validated syzygy input: generator degrees and curve, plus the claimed
// slope data of the kernel bundle of  O(1-d_1) + ... + O(1-d_mu) ->> O(1).
// Rank and degree of the kernel are forced:  rank = mu - 1,
// degree = sum_i (1 - d_i) * deg(X) - deg(X).
class SyzygyInput {
public:
  SyzygyInput(GeneratorDegrees degrees, CurveData curve, AnyHNData v0);

  const GeneratorDegrees& degrees() const { return degrees_; }
  const CurveData& curve() const { return curve_; }
  const AnyHNData& v0() const { return v0_; }
  bool is_strong() const { return std::holds_alternative<StrongHNData>(v0_); }
  const StrongHNData& strong_v0() const;
  const HNData& plain_v0() const;
  std::span<const HNPiece> v0_pieces() const;

private:
  GeneratorDegrees degrees_;
  CurveData curve_;
  AnyHNData v0_;
};

SyzygyInput validate_syzygy_hn(AnyHNData v0, const GeneratorDegrees& degrees,
                               const CurveData& curve);

}  // namespace hkd
