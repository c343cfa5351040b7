#pragma once

#include <optional>
#include <vector>

#include "hkd/rational.hpp"

namespace hkd {

struct AffinePiece {
  Rational slope;
  Rational intercept;
  Rational value(const Rational& x) const { return slope * x + intercept; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

// Continuous piecewise-linear function with exact rational breakpoints.
// pieces.size() == breakpoints.size() + 1: piece i lives on
// [breakpoints[i-1], breakpoints[i]) with the outer pieces unbounded.
// An optional domain floor clips the function: value(x) = 0 for x < floor,
// and the representation is normalized so all stored breakpoints lie above
// the floor. Construction canonicalizes (drops breakpoints between equal
// adjacent pieces), so equality of values implies structural equality.
class PiecewiseLinear {
public:
  PiecewiseLinear();  // the zero function
  PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<AffinePiece> pieces,
                  std::optional<Rational> domain_floor = std::nullopt);

  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const std::optional<Rational>& domain_floor() const { return floor_; }

  Rational value(const Rational& x) const;
  PiecewiseLinear with_floor(Rational floor) const;

  PiecewiseLinear operator+(const PiecewiseLinear& other) const;
  PiecewiseLinear operator-(const PiecewiseLinear& other) const;
  PiecewiseLinear scaled(const Rational& c) const;
  PiecewiseLinear shifted(const Rational& c) const;  // pointwise + c

  // True when value(x) >= 0 for every x in [floor, +inf)
  // (over all of R when no floor is set).
  bool nonnegative_on_domain() const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

private:
  std::vector<Rational> breaks_;
  std::vector<AffinePiece> pieces_;
  std::optional<Rational> floor_;

  void normalize();
};

// Exact integral over the support. Requires the rightmost piece to be
// identically zero, and either a domain floor or an identically zero leftmost
// piece; anything else has unbounded support and is rejected.
Rational integrate(const PiecewiseLinear& f);

}  // namespace hkd
