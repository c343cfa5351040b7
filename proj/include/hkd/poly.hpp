#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hkd/fp.hpp"

namespace hkd {

// Monomial in three variables.
struct Mono {
  int32_t e[3] = {0, 0, 0};

  long deg() const { return static_cast<long>(e[0]) + e[1] + e[2]; }
  bool divides(const Mono& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }
  Mono operator*(const Mono& m) const { return {{e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]}}; }
  Mono quotient_by(const Mono& m) const {
    return {{e[0] - m.e[0], e[1] - m.e[1], e[2] - m.e[2]}};
  }
  static Mono lcm(const Mono& a, const Mono& b) {
    return {{std::max(a.e[0], b.e[0]), std::max(a.e[1], b.e[1]), std::max(a.e[2], b.e[2])}};
  }
  friend bool operator==(const Mono&, const Mono&) = default;
};

// Degree-reverse-lexicographic order with x > y > z: higher total degree
// wins; on ties the rightmost nonzero exponent difference decides, negative
// meaning greater. Compatible with multiplication.
inline bool drl_greater(const Mono& a, const Mono& b) {
  const long da = a.deg(), db = b.deg();
  if (da != db) return da > db;
  if (a.e[2] != b.e[2]) return a.e[2] < b.e[2];
  if (a.e[1] != b.e[1]) return a.e[1] < b.e[1];
  return false;
}

struct Term {
  Mono m;
  uint32_t c = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

// Homogeneous polynomial over F_p in x, y, z. Terms are kept sorted strictly
// descending in degrevlex with coefficients in (0, p).
class Poly {
public:
  explicit Poly(PrimeField field) : F_(field) {}
  Poly(PrimeField field, std::vector<Term> raw_terms);

  static Poly parse(const std::string& text, PrimeField field,
                    const std::array<std::string, 3>& vars = {"x", "y", "z"});

  const PrimeField& field() const { return F_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const { return terms_.empty() ? -1 : terms_.front().m.deg(); }
  const Term& lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(uint32_t c) const;
  Poly times_monomial(const Mono& m, uint32_t c) const;
  Poly monic() const;
  Poly pow(unsigned long e) const;

  // Exponent scaling m -> m^q; equals the q-th power when q is a power of p.
  Poly exponent_scaled(long q) const;

  std::string to_string(const std::array<std::string, 3>& vars = {"x", "y", "z"}) const;

  friend bool operator==(const Poly&, const Poly&) = default;

private:
  PrimeField F_;
  std::vector<Term> terms_;

  void normalize();
};

// Formal partial derivative with respect to variable index 0, 1 or 2.
Poly partial_derivative(const Poly& f, int var);

}  // namespace hkd
