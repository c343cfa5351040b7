#pragma once

#include <cstdint>

#include "hkd/rational.hpp"

namespace hkd {

// Arithmetic in F_p for word-sized prime p.
struct PrimeField {
  uint32_t p = 2;

  explicit PrimeField(uint32_t prime) : p(prime) {
    if (!is_prime(Integer(prime))) throw ValidationError("PrimeField: p must be prime");
  }

  uint32_t normalize(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw ValidationError("PrimeField: inverse of zero");
    return pow(a, p - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

}  // namespace hkd
