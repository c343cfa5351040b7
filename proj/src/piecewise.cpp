#include "hkd/piecewise.hpp"

#include <algorithm>

#include "hkd/errors.hpp"

namespace hkd {

PiecewiseLinear::PiecewiseLinear() : pieces_{AffinePiece{0, 0}} {}

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breakpoints,
                                 std::vector<AffinePiece> pieces,
                                 std::optional<Rational> domain_floor)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)), floor_(std::move(domain_floor)) {
  if (pieces_.size() != breaks_.size() + 1)
    throw ValidationError("PiecewiseLinear: need exactly one more piece than breakpoints");
  for (size_t i = 0; i + 1 < breaks_.size(); ++i)
    if (!(breaks_[i] < breaks_[i + 1]))
      throw ValidationError("PiecewiseLinear: breakpoints must be strictly increasing");
  for (size_t i = 0; i < breaks_.size(); ++i)
    if (pieces_[i].value(breaks_[i]) != pieces_[i + 1].value(breaks_[i]))
      throw ValidationError("PiecewiseLinear: discontinuity at x = " + breaks_[i].to_string());
  normalize();
}

void PiecewiseLinear::normalize() {
  // Pieces at or below the floor are unreachable; keep the one active at the floor.
  if (floor_) {
    size_t first_above = 0;
    while (first_above < breaks_.size() && breaks_[first_above] <= *floor_) ++first_above;
    if (first_above > 0) {
      breaks_.erase(breaks_.begin(), breaks_.begin() + first_above);
      pieces_.erase(pieces_.begin(), pieces_.begin() + first_above);
    }
  }
  for (size_t i = 0; i + 1 < pieces_.size();) {
    if (pieces_[i] == pieces_[i + 1]) {
      pieces_.erase(pieces_.begin() + i + 1);
      breaks_.erase(breaks_.begin() + i);
    } else {
      ++i;
    }
  }
}

Rational PiecewiseLinear::value(const Rational& x) const {
  if (floor_ && x < *floor_) return 0;
  size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin();
  return pieces_[i].value(x);
}

PiecewiseLinear PiecewiseLinear::with_floor(Rational floor) const {
  if (floor_ && *floor_ > floor)
    throw ValidationError("PiecewiseLinear: cannot lower an existing domain floor");
  return PiecewiseLinear(breaks_, pieces_, std::move(floor));
}

static std::optional<Rational> combined_floor(const std::optional<Rational>& a,
                                              const std::optional<Rational>& b) {
  if (a.has_value() != b.has_value())
    throw ValidationError("PiecewiseLinear: arithmetic needs matching domain floors");
  if (a && *a != *b)
    throw ValidationError("PiecewiseLinear: arithmetic needs matching domain floors");
  return a;
}

PiecewiseLinear PiecewiseLinear::operator+(const PiecewiseLinear& other) const {
  auto floor = combined_floor(floor_, other.floor_);
  std::vector<Rational> breaks;
  std::merge(breaks_.begin(), breaks_.end(), other.breaks_.begin(), other.breaks_.end(),
             std::back_inserter(breaks));
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<AffinePiece> pieces;
  size_t ia = 0, ib = 0;
  for (size_t i = 0; i <= breaks.size(); ++i) {
    pieces.push_back({pieces_[ia].slope + other.pieces_[ib].slope,
                      pieces_[ia].intercept + other.pieces_[ib].intercept});
    if (i < breaks.size()) {
      if (ia < breaks_.size() && breaks_[ia] == breaks[i]) ++ia;
      if (ib < other.breaks_.size() && other.breaks_[ib] == breaks[i]) ++ib;
    }
  }
  return PiecewiseLinear(std::move(breaks), std::move(pieces), std::move(floor));
}

PiecewiseLinear PiecewiseLinear::operator-(const PiecewiseLinear& other) const {
  return *this + other.scaled(-1);
}

PiecewiseLinear PiecewiseLinear::scaled(const Rational& c) const {
  std::vector<AffinePiece> pieces = pieces_;
  for (auto& piece : pieces) {
    piece.slope *= c;
    piece.intercept *= c;
  }
  return PiecewiseLinear(breaks_, std::move(pieces), floor_);
}

PiecewiseLinear PiecewiseLinear::shifted(const Rational& c) const {
  std::vector<AffinePiece> pieces = pieces_;
  for (auto& piece : pieces) piece.intercept += c;
  return PiecewiseLinear(breaks_, std::move(pieces), floor_);
}

bool PiecewiseLinear::nonnegative_on_domain() const {
  // Affine on each interval, so checking endpoints and end-piece slopes suffices.
  if (floor_) {
    if (value(*floor_) < 0) return false;
  } else {
    const auto& left = pieces_.front();
    if (left.slope > 0) return false;
    if (left.slope == 0 && left.intercept < 0) return false;
  }
  for (const auto& b : breaks_)
    if (value(b) < 0) return false;
  const auto& right = pieces_.back();
  if (right.slope < 0) return false;
  if (breaks_.empty() && !floor_ && right.intercept < 0) return false;
  return true;
}

Rational integrate(const PiecewiseLinear& f) {
  const AffinePiece zero{0, 0};
  if (f.pieces().back() != zero)
    throw ValidationError("integrate: unbounded support on the right");
  if (!f.domain_floor() && f.pieces().front() != zero)
    throw ValidationError("integrate: unbounded support on the left (no domain floor)");
  Rational total;
  const auto& breaks = f.breakpoints();
  for (size_t i = 0; i < f.pieces().size(); ++i) {
    if (i == 0 && !f.domain_floor()) continue;  // leftmost piece is zero
    if (i == breaks.size()) break;              // rightmost piece is zero
    Rational lo = (i == 0) ? *f.domain_floor() : breaks[i - 1];
    Rational hi = breaks[i];
    if (hi <= lo) continue;
    const auto& piece = f.pieces()[i];
    total += piece.slope * (hi * hi - lo * lo) / 2 + piece.intercept * (hi - lo);
  }
  return total;
}

}  // namespace hkd
