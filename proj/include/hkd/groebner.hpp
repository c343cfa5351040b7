#pragma once

#include <span>
#include <vector>

#include "hkd/poly.hpp"

namespace hkd {

// Degree-truncated Groebner basis in degrevlex. For homogeneous input,
// processing S-pairs in increasing lcm degree makes the lead-term ideal
// correct in every degree up to the truncation bound, which is all the
// graded queries below need.
struct GroebnerBasis {
  std::vector<Poly> basis;  // monic, nonzero
  long truncation = 0;

  const PrimeField& field() const { return basis.front().field(); }
};

GroebnerBasis buchberger_truncated(std::vector<Poly> gens, long truncation);

// Remainder of f under full reduction by the basis (largest reducible term
// first). Zero iff f lies in the ideal, up to the truncation degree.
Poly normal_form(const Poly& f, std::span<const Poly> basis);

// Number of degree-m monomials not divisible by any basis lead term;
// equals dim (P / ideal)_m for m <= truncation.
long standard_monomial_count(const GroebnerBasis& gb, long m);

// Re-reduce every S-polynomial with lcm degree within the truncation bound.
bool spoly_self_check(const GroebnerBasis& gb);

}  // namespace hkd
