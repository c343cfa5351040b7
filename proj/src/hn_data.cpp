#include "hkd/hn_data.hpp"

#include <algorithm>
#include <map>

namespace hkd {

void validate_pieces(std::span<const HNPiece> pieces) {
  if (pieces.empty()) throw ValidationError("HN data: no pieces");
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].rank < 1) throw ValidationError("HN data: piece rank must be >= 1");
    if (i > 0 && !(pieces[i - 1].slope > pieces[i].slope))
      throw ValidationError("HN data: slopes must be strictly decreasing");
  }
}

StrongHNData::StrongHNData(std::vector<HNPiece> pieces, Integer characteristic,
                           long frobenius_level)
    : pieces_(std::move(pieces)),
      characteristic_(std::move(characteristic)),
      frobenius_level_(frobenius_level) {
  validate_pieces(pieces_);
  if (!is_prime(characteristic_))
    throw ValidationError("StrongHNData: characteristic must be prime");
  if (frobenius_level_ < 0)
    throw ValidationError("StrongHNData: Frobenius level must be >= 0");
  const Integer scale = integer_pow(characteristic_, frobenius_level_);
  for (const auto& piece : pieces_) {
    const Rational total = piece.slope * Rational(scale) * Rational(Integer(piece.rank));
    if (!total.is_integer())
      throw ValidationError(
          "StrongHNData: slope " + piece.slope.to_string() + " times p^level times rank " +
          std::to_string(piece.rank) + " is not an integer");
  }
}

GeneratorDegrees::GeneratorDegrees(std::vector<long> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() < 2) throw ValidationError("GeneratorDegrees: need at least 2 generators");
  std::sort(degrees_.begin(), degrees_.end());
  if (degrees_.front() < 1) throw ValidationError("GeneratorDegrees: degrees must be >= 1");
  for (long d : degrees_) {
    if (!distinct_.empty() && distinct_.back().first == d)
      ++distinct_.back().second;
    else
      distinct_.emplace_back(d, 1);
  }
}

BundleStats bundle_stats(std::span<const HNPiece> pieces) {
  validate_pieces(pieces);
  BundleStats stats;
  for (const auto& piece : pieces) {
    stats.rank += piece.rank;
    stats.degree += piece.slope * Rational(Integer(piece.rank));
  }
  stats.mu_max = pieces.front().slope;
  stats.mu_min = pieces.back().slope;
  return stats;
}

HNData hn_of_generator_degrees(const GeneratorDegrees& degrees, const CurveData& curve) {
  std::vector<HNPiece> pieces;
  const Rational d(Integer(curve.polarization_degree));
  for (const auto& [deg, mult] : degrees.distinct())
    pieces.push_back({Rational(Integer(1 - deg)) * d, mult});
  // ascending generator degree means descending slope; already ordered
  return HNData(std::move(pieces));
}

StrongHNData strong_hn_of_generator_degrees(const GeneratorDegrees& degrees,
                                            const CurveData& curve,
                                            const Integer& characteristic) {
  HNData plain = hn_of_generator_degrees(degrees, curve);
  return StrongHNData(std::vector<HNPiece>(plain.pieces().begin(), plain.pieces().end()),
                      characteristic, 0);
}

StrongHNData frobenius_pullback(const StrongHNData& data, long extra_level) {
  if (extra_level < 0) throw ValidationError("frobenius_pullback: level must be >= 0");
  const Rational scale(integer_pow(data.characteristic(), extra_level));
  std::vector<HNPiece> pieces(data.pieces().begin(), data.pieces().end());
  for (auto& piece : pieces) piece.slope *= scale;
  return StrongHNData(std::move(pieces), data.characteristic(),
                      data.frobenius_level() + extra_level);
}

SyzygyInput::SyzygyInput(GeneratorDegrees degrees, CurveData curve, AnyHNData v0)
    : degrees_(std::move(degrees)), curve_(std::move(curve)), v0_(std::move(v0)) {}

const StrongHNData& SyzygyInput::strong_v0() const {
  if (!is_strong())
    throw ValidationError("SyzygyInput: operation needs characteristic-p (strong) slope data");
  return std::get<StrongHNData>(v0_);
}

const HNData& SyzygyInput::plain_v0() const {
  if (is_strong())
    throw ValidationError("SyzygyInput: operation needs characteristic-0 slope data");
  return std::get<HNData>(v0_);
}

std::span<const HNPiece> SyzygyInput::v0_pieces() const {
  return std::visit([](const auto& d) { return d.pieces(); }, v0_);
}

SyzygyInput validate_syzygy_hn(AnyHNData v0, const GeneratorDegrees& degrees,
                               const CurveData& curve) {
  const BundleStats stats =
      std::visit([](const auto& d) { return bundle_stats(d.pieces()); }, v0);
  if (stats.rank != degrees.mu() - 1)
    throw ValidationError("validate_syzygy_hn: rank is " + std::to_string(stats.rank) +
                          ", expected mu - 1 = " + std::to_string(degrees.mu() - 1));
  Rational expected;
  const Rational d(Integer(curve.polarization_degree));
  for (long deg : degrees.degrees()) expected += Rational(Integer(1 - deg)) * d;
  expected -= d;
  if (stats.degree != expected)
    throw ValidationError("validate_syzygy_hn: degree is " + stats.degree.to_string() +
                          ", expected " + expected.to_string());
  return SyzygyInput(degrees, curve, std::move(v0));
}

}  // namespace hkd
