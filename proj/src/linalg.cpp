#include "hkd/linalg.hpp"

#include <algorithm>

#include "hkd/errors.hpp"

namespace hkd {

MonoTable::MonoTable(long degree) : degree_(degree) {
  if (degree < 0) throw ValidationError("MonoTable: negative degree");
  monos_.reserve(monomial_count(degree));
  for (int32_t a = 0; a <= degree; ++a)
    for (int32_t b = 0; a + b <= degree; ++b)
      monos_.push_back({{a, b, static_cast<int32_t>(degree - a - b)}});
  std::sort(monos_.begin(), monos_.end(),
            [](const Mono& x, const Mono& y) { return drl_greater(x, y); });
  pos_.assign(static_cast<size_t>(degree + 1) * (degree + 1), 0);
  for (size_t i = 0; i < monos_.size(); ++i)
    pos_[monos_[i].e[0] * (degree_ + 1) + monos_[i].e[1]] = i;
}

GradedRankEngine::GradedRankEngine(Poly h) : h_(std::move(h)), F_(h_.field()) {
  if (h_.is_zero()) throw ValidationError("GradedRankEngine: h must be nonzero");
}

long GradedRankEngine::ring_dim(long m) const {
  return monomial_count(m) - monomial_count(m - h_.degree());
}

long GradedRankEngine::quotient_dim(std::span<const Poly> gens, long m) const {
  if (m < 0) throw ValidationError("quotient_dim: negative degree");
  const MonoTable table(m);
  const size_t n = table.size();
  const Mono lt = h_.lead().m;
  const uint32_t lt_inv = F_.inv(h_.lead().c);

  // Monomial basis of P_m/(h)_m: degree-m monomials not divisible by LT(h).
  std::vector<long> reduced_index(n, -1);
  std::vector<size_t> reduced_monos;
  for (size_t i = 0; i < n; ++i) {
    if (!lt.divides(table.mono(i))) {
      reduced_index[i] = static_cast<long>(reduced_monos.size());
      reduced_monos.push_back(i);
    }
  }
  const size_t rdim = reduced_monos.size();
  if (rdim == 0) return 0;

  std::vector<std::vector<uint32_t>> rows;     // echelon rows, monic leads
  std::vector<long> pivot_at(rdim, -1);        // reduced index -> row
  size_t rank = 0;

  std::vector<uint32_t> full(n);      // dense accumulator over all of P_m
  std::vector<uint32_t> vec(rdim);    // compressed to the reduced basis

  auto insert_candidate = [&](const Poly& g, const Mono& mult) {
    std::fill(full.begin(), full.end(), 0);
    for (const auto& term : g.terms()) {
      const size_t idx = table.index(term.m * mult);
      full[idx] = F_.add(full[idx], term.c);
    }
    // Reduce modulo h: one descending sweep; every rewrite only touches
    // strictly smaller monomials, so a single pass reaches the remainder.
    for (size_t i = 0; i < n; ++i) {
      if (full[i] == 0 || !lt.divides(table.mono(i))) continue;
      const uint32_t c = F_.mul(full[i], lt_inv);
      full[i] = 0;
      const Mono q = table.mono(i).quotient_by(lt);
      for (size_t t = 1; t < h_.terms().size(); ++t) {
        const auto& term = h_.terms()[t];
        const size_t idx = table.index(term.m * q);
        full[idx] = F_.sub(full[idx], F_.mul(c, term.c));
      }
    }
    for (size_t j = 0; j < rdim; ++j) vec[j] = full[reduced_monos[j]];

    size_t lead = 0;
    while (lead < rdim) {
      if (vec[lead] == 0) {
        ++lead;
        continue;
      }
      const long row = pivot_at[lead];
      if (row < 0) break;
      const uint32_t c = vec[lead];
      const auto& pivot = rows[row];
      for (size_t j = lead; j < rdim; ++j)
        if (pivot[j]) vec[j] = F_.sub(vec[j], F_.mul(c, pivot[j]));
      ++lead;
    }
    if (lead >= rdim) return;
    const uint32_t inv = F_.inv(vec[lead]);
    std::vector<uint32_t> row(rdim, 0);
    for (size_t j = lead; j < rdim; ++j) row[j] = F_.mul(vec[j], inv);
    pivot_at[lead] = static_cast<long>(rows.size());
    rows.push_back(std::move(row));
    ++rank;
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const long rest = m - g.degree();
    if (rest < 0) continue;
    const MonoTable mult_table(rest);
    for (size_t j = 0; j < mult_table.size() && rank < rdim; ++j)
      insert_candidate(g, mult_table.mono(j));
    if (rank >= rdim) break;
  }
  return static_cast<long>(rdim - rank);
}

}  // namespace hkd
