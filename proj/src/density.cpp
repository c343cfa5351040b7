#include "hkd/density.hpp"

#include <algorithm>

#include "hkd/errors.hpp"

namespace hkd {

PiecewiseLinear density_of_bundle(const StrongHNData& data, const CurveData& curve) {
  const Rational d(Integer(curve.polarization_degree));
  const auto pieces = data.pieces();
  const size_t k = pieces.size();

  std::vector<Rational> breaks;
  breaks.reserve(k);
  for (const auto& piece : pieces) breaks.push_back(Rational(1) - piece.slope / d);

  // On the interval left of breaks[j], hinges j..k-1 are active:
  //   value = sum_{i >= j} rank_i * (d - slope_i)  -  d * (sum_{i >= j} rank_i) * x
  std::vector<AffinePiece> affine(k + 1, AffinePiece{0, 0});
  Rational rank_tail, const_tail;
  for (size_t j = k; j-- > 0;) {
    rank_tail += Integer(pieces[j].rank);
    const_tail += Rational(Integer(pieces[j].rank)) * (d - pieces[j].slope);
    affine[j] = {-(d * rank_tail), const_tail};
  }
  return PiecewiseLinear(std::move(breaks), std::move(affine));
}

Rational support_endpoint(const StrongHNData& data, const CurveData& curve) {
  const Rational d(Integer(curve.polarization_degree));
  return Rational(1) - data.pieces().back().slope / d;
}

PiecewiseLinear density_difference(const StrongHNData& v, const StrongHNData& m,
                                   const CurveData& curve) {
  PiecewiseLinear diff =
      (density_of_bundle(v, curve) - density_of_bundle(m, curve)).with_floor(0);
  if (!diff.nonnegative_on_domain())
    throw ValidationError("pair density is negative somewhere on [0, inf)");
  return diff;
}

PiecewiseLinear pair_density(const SyzygyInput& input) {
  const StrongHNData& v0 = input.strong_v0();
  const StrongHNData m0 =
      strong_hn_of_generator_degrees(input.degrees(), input.curve(), v0.characteristic());
  return density_difference(v0, m0, input.curve());
}

H1Bounds h1_semistable(const Rational& mu, long rank, long twist, const CurveData& curve) {
  if (rank < 1) throw ValidationError("h1_semistable: rank must be >= 1");
  const long g = curve.genus;
  const long d = curve.polarization_degree;
  const Rational r = Rational(Integer(rank));
  const Rational twisted = mu + Rational(Integer(d)) * Rational(Integer(twist));
  if (twisted < 0) {
    // h0 vanishes below slope zero, so h1 is minus the Euler characteristic.
    const Rational value = r * (-twisted + Rational(Integer(g - 1)));
    return {value, value};
  }
  if (twisted <= Rational(Integer(d)) * Rational(Integer(d - 3))) {
    Rational hi = r * Rational(Integer(g - 1));
    if (hi < 0) hi = 0;
    return {0, hi};
  }
  return {0, 0};
}

namespace {

// Continuous "uncertainty width" profile: baseline W everywhere, raised to 2W
// on each corner window [b, b+w] with linear ramps of width w on both sides.
// Windows whose ramps would overlap are merged conservatively.
PiecewiseLinear shift_profile(const std::vector<Rational>& corners, const Rational& w,
                              const Rational& width) {
  std::vector<std::pair<Rational, Rational>> plateaus;  // elevated [start, end]
  for (const auto& b : corners) {
    if (!plateaus.empty() && b <= plateaus.back().second + w + w)
      plateaus.back().second = std::max(plateaus.back().second, b + w);
    else
      plateaus.emplace_back(b, b + w);
  }
  std::vector<Rational> breaks;
  std::vector<AffinePiece> pieces;
  const Rational up_slope = width / w;
  pieces.push_back({0, width});  // baseline
  for (const auto& [start, end] : plateaus) {
    breaks.push_back(start - w);
    pieces.push_back({up_slope, width - up_slope * (start - w)});
    breaks.push_back(start);
    pieces.push_back({0, width + width});
    breaks.push_back(end);
    pieces.push_back({-up_slope, width + width + up_slope * end});
    breaks.push_back(end + w);
    pieces.push_back({0, width});
  }
  return PiecewiseLinear(std::move(breaks), std::move(pieces));
}

}  // namespace

EnvelopePair finite_level_envelope(const StrongHNData& data, const CurveData& curve,
                                   long level) {
  if (level < 0) throw ValidationError("finite_level_envelope: level must be >= 0");
  EnvelopePair env;
  env.level = level;
  env.witness_level = data.frobenius_level();
  env.grid = integer_pow(data.characteristic(), level + data.frobenius_level());

  const PiecewiseLinear f = density_of_bundle(data, curve);
  const long rank = bundle_stats(data).rank;
  const Rational width =
      Rational(Integer(rank * std::max(curve.genus - 1, 0L))) / Rational(env.grid);
  if (width == 0) {
    env.lower = f;
    env.upper = f;
    return env;
  }
  const Rational w =
      Rational(Integer(curve.polarization_degree - 3)) / Rational(env.grid);
  if (w <= 0) {
    // Degenerate window width: no pinching anywhere, keep the wide band.
    env.lower = f.shifted(-(width + width));
    env.upper = f.shifted(width + width);
    return env;
  }
  const Rational d(Integer(curve.polarization_degree));
  std::vector<Rational> corners;
  for (const auto& piece : data.pieces()) corners.push_back(Rational(1) - piece.slope / d);
  const PiecewiseLinear shift = shift_profile(corners, w, width);
  env.lower = f - shift;
  env.upper = f + shift;
  return env;
}

EnvelopePair pair_envelope(const SyzygyInput& input, long level) {
  const StrongHNData& v0 = input.strong_v0();
  const StrongHNData m0 =
      strong_hn_of_generator_degrees(input.degrees(), input.curve(), v0.characteristic());
  const EnvelopePair ev = finite_level_envelope(v0, input.curve(), level);
  // Match the grids: m0 is Frobenius-stable at level 0.
  const EnvelopePair em =
      finite_level_envelope(m0, input.curve(), level + v0.frobenius_level());
  EnvelopePair env;
  env.level = level;
  env.witness_level = v0.frobenius_level();
  env.grid = ev.grid;
  env.lower = (ev.lower - em.upper).with_floor(0);
  env.upper = (ev.upper - em.lower).with_floor(0);
  return env;
}

}  // namespace hkd
