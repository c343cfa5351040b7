#include "hkd/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hkd/errors.hpp"
#include "hkd/linalg.hpp"

namespace hkd {

namespace {

struct Pair {
  long lcm_deg;
  size_t i, j;
  Mono lcm;
  // Deterministic processing order: by degree, then by creation history.
  friend bool operator<(const Pair& a, const Pair& b) {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

Poly spoly(const Poly& f, const Poly& g) {
  const Mono l = Mono::lcm(f.lead().m, g.lead().m);
  const auto& F = f.field();
  const Poly a = f.times_monomial(l.quotient_by(f.lead().m), F.inv(f.lead().c));
  const Poly b = g.times_monomial(l.quotient_by(g.lead().m), F.inv(g.lead().c));
  return a - b;
}

}  // namespace

Poly normal_form(const Poly& f, std::span<const Poly> basis) {
  if (f.is_zero()) return f;
  const auto& F = f.field();
  const long deg = f.degree();
  const MonoTable table(deg);
  std::vector<uint32_t> val(table.size(), 0);
  for (const auto& t : f.terms()) val[table.index(t.m)] = t.c;

  // Descending sweep: a rewrite at position i only feeds strictly smaller
  // monomials, so one pass fully reduces.
  for (size_t i = 0; i < table.size(); ++i) {
    if (val[i] == 0) continue;
    const Mono& m = table.mono(i);
    const Poly* reducer = nullptr;
    for (const auto& b : basis) {
      if (b.lead().m.divides(m)) {
        reducer = &b;
        break;
      }
    }
    if (!reducer) continue;
    const Mono q = m.quotient_by(reducer->lead().m);
    const uint32_t c = F.mul(val[i], F.inv(reducer->lead().c));
    val[i] = 0;
    for (size_t t = 1; t < reducer->terms().size(); ++t) {
      const auto& term = reducer->terms()[t];
      const size_t idx = table.index(term.m * q);
      val[idx] = F.sub(val[idx], F.mul(c, term.c));
    }
  }
  std::vector<Term> out;
  for (size_t i = 0; i < table.size(); ++i)
    if (val[i]) out.push_back({table.mono(i), val[i]});
  return Poly(F, std::move(out));
}

GroebnerBasis buchberger_truncated(std::vector<Poly> gens, long truncation) {
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Poly& p) { return p.is_zero(); }),
             gens.end());
  if (gens.empty()) throw ValidationError("buchberger: no nonzero generators");
  if (truncation < 1) throw ValidationError("buchberger: truncation must be >= 1");

  GroebnerBasis gb;
  gb.truncation = truncation;
  std::set<Pair> queue;

  auto add_poly = [&](const Poly& p) {
    const Poly q = p.monic();
    const size_t j = gb.basis.size();
    for (size_t i = 0; i < j; ++i) {
      const Mono& li = gb.basis[i].lead().m;
      const Mono& lj = q.lead().m;
      const Mono l = Mono::lcm(li, lj);
      if (l.deg() > truncation) continue;
      if (l == li * lj) continue;  // coprime leads: S-poly reduces to zero
      queue.insert({l.deg(), i, j, l});
    }
    gb.basis.push_back(q);
  };

  for (const auto& g : gens)
    if (g.degree() <= truncation) add_poly(g);
  if (gb.basis.empty()) throw ValidationError("buchberger: all generators above truncation");

  while (!queue.empty()) {
    const Pair pair = *queue.begin();
    queue.erase(queue.begin());
    const Poly s = spoly(gb.basis[pair.i], gb.basis[pair.j]);
    if (s.is_zero()) continue;
    const Poly r = normal_form(s, gb.basis);
    if (!r.is_zero()) add_poly(r);
  }
  return gb;
}

long standard_monomial_count(const GroebnerBasis& gb, long m) {
  if (m > gb.truncation)
    throw ValidationError("standard_monomial_count: degree beyond truncation");
  if (m < 0) return 0;
  std::vector<Mono> leads;
  for (const auto& b : gb.basis)
    if (b.degree() <= m) leads.push_back(b.lead().m);
  const MonoTable table(m);
  long count = 0;
  for (size_t i = 0; i < table.size(); ++i) {
    bool divisible = false;
    for (const auto& l : leads) {
      if (l.divides(table.mono(i))) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
  }
  return count;
}

bool spoly_self_check(const GroebnerBasis& gb) {
  for (size_t i = 0; i < gb.basis.size(); ++i) {
    for (size_t j = i + 1; j < gb.basis.size(); ++j) {
      const Mono l = Mono::lcm(gb.basis[i].lead().m, gb.basis[j].lead().m);
      if (l.deg() > gb.truncation) continue;
      const Poly s = spoly(gb.basis[i], gb.basis[j]);
      if (s.is_zero()) continue;
      if (!normal_form(s, gb.basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace hkd
