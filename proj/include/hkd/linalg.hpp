#pragma once

#include <span>
#include <vector>

#include "hkd/poly.hpp"

namespace hkd {

// Table of the degree-m monomials in descending degrevlex order with O(1)
// index lookup by exponents.
class MonoTable {
public:
  explicit MonoTable(long degree);
  long degree() const { return degree_; }
  size_t size() const { return monos_.size(); }
  const Mono& mono(size_t i) const { return monos_[i]; }
  size_t index(const Mono& m) const { return pos_[m.e[0] * (degree_ + 1) + m.e[1]]; }

private:
  long degree_;
  std::vector<Mono> monos_;
  std::vector<size_t> pos_;
};

// Exact graded dimensions of F_p[x,y,z] / (h, g_1, ..., g_k) by Gaussian
// elimination. The degree-m multiples of h form a block that is already in
// echelon form (their lead monomials LT(h)*mono are distinct), so each
// candidate g_i * mono is first reduced modulo h alone -- division by a single
// polynomial has a unique remainder -- and then eliminated over the monomial
// basis of degree m monomials not divisible by LT(h).
class GradedRankEngine {
public:
  explicit GradedRankEngine(Poly h);

  const Poly& h() const { return h_; }

  // dim_Fp (P / (h, gens))_m
  long quotient_dim(std::span<const Poly> gens, long m) const;

  // dim_Fp (P / (h))_m = C(m+2, 2) - C(m - deg h + 2, 2)
  long ring_dim(long m) const;

private:
  Poly h_;
  PrimeField F_;
};

inline long monomial_count(long m) { return m < 0 ? 0 : (m + 2) * (m + 1) / 2; }

}  // namespace hkd
