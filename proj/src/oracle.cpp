#include "hkd/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

// Largest x beyond which f is identically zero. Rejects functions whose
// rightmost piece is nonzero (unbounded support has no endpoint).
Rational support_end(const PiecewiseLinear& f) {
  const auto& pieces = f.pieces();
  const auto& breaks = f.breakpoints();
  const AffinePiece zero{};
  for (size_t i = pieces.size(); i-- > 0;) {
    if (pieces[i] == zero) continue;
    if (i + 1 == pieces.size())
      throw ValidationError("support endpoint: function is nonzero on the unbounded right piece");
    return breaks[i];
  }
  return f.domain_floor().value_or(Rational(0));
}

// dims[i] = quotient_dim(gens, lo + i), farmed out over up to `jobs` threads.
// Each quotient_dim call is independent and works on its own scratch space.
void dims_parallel(const GradedRankEngine& engine, std::span<const Poly> gens, long lo,
                   std::vector<long>& dims, long jobs) {
  const size_t count = dims.size();
  const long workers = std::min<long>(jobs, static_cast<long>(count));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) dims[i] = engine.quotient_dim(gens, lo + static_cast<long>(i));
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&]() {
    try {
      for (size_t i; (i = next.fetch_add(1)) < count;)
        dims[i] = engine.quotient_dim(gens, lo + static_cast<long>(i));
    } catch (...) {
      std::lock_guard<std::mutex> guard(failure_lock);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (long w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

long power_within(long p, long n, long cap) {
  long q = 1;
  for (long i = 0; i < n; ++i) {
    if (q > cap / p)
      throw BudgetExceeded("Frobenius level " + std::to_string(n) + " overflows the degree budget");
    q *= p;
  }
  return q;
}

}  // namespace

RingPresentation::RingPresentation(PrimeField F, Poly h, std::array<std::string, 3> vars)
    : F_(F), h_(std::move(h)), vars_(std::move(vars)) {
  if (h_.is_zero()) throw ValidationError("RingPresentation: defining polynomial is zero");
  degree_ = h_.degree();
  if (degree_ < 1) throw ValidationError("RingPresentation: defining polynomial is a constant");
  genus_ = (degree_ - 1) * (degree_ - 2) / 2;
}

RingPresentation RingPresentation::make(uint32_t characteristic, const std::string& defining_poly,
                                        const std::array<std::string, 3>& variables) {
  const PrimeField F(characteristic);
  RingPresentation ring(F, Poly::parse(defining_poly, F, variables), variables);

  // Jacobian criterion: when (h, dh/dx, dh/dy, dh/dz) contains a full graded
  // piece, the ideal is irrelevant, so h = dh = 0 has no projective solution
  // and the curve is smooth. The converse bound: an irrelevant ideal with
  // these generator degrees swallows some piece by degree 3(d-1) - 2.
  std::vector<Poly> partials;
  for (int v = 0; v < 3; ++v) {
    Poly dv = partial_derivative(ring.h_, v);
    if (!dv.is_zero()) partials.push_back(std::move(dv));
  }
  bool certified = false;
  const long top = std::max<long>(1, 3 * ring.degree_ - 4);
  if (!partials.empty()) {
    const GradedRankEngine engine(ring.h_);
    for (long m = top; m >= 1 && !certified; --m)
      certified = engine.quotient_dim(partials, m) == 0;
  }
  if (!certified)
    ring.warnings_.push_back(
        "smoothness not certified: the Jacobian ideal keeps nonzero graded pieces through "
        "degree " +
        std::to_string(top) + "; the genus value assumes a smooth plane curve");
  return ring;
}

std::vector<long> IdealSpec::degrees() const {
  std::vector<long> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.degree());
  return out;
}

void validate_ideal(const IdealSpec& ideal) {
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) throw ValidationError("ideal: zero generator");
    if (g.degree() < 1) throw ValidationError("ideal: constant generator makes the ideal the unit ideal");
  }
}

IdealSpec parse_ideal(const std::vector<std::string>& generator_texts,
                      const RingPresentation& ring) {
  IdealSpec ideal;
  ideal.generators.reserve(generator_texts.size());
  for (const auto& text : generator_texts)
    ideal.generators.push_back(Poly::parse(text, ring.field(), ring.variables()));
  validate_ideal(ideal);
  return ideal;
}

IdealSpec frobenius_power(const IdealSpec& ideal, long q, const PrimeField& field) {
  if (q < 1) throw ValidationError("frobenius_power: q must be a positive power of p");
  long rest = q;
  while (rest % field.p == 0) rest /= field.p;
  if (rest != 1)
    throw ValidationError("frobenius_power: " + std::to_string(q) + " is not a power of " +
                          std::to_string(field.p));
  IdealSpec out;
  out.generators.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) {
    if (!(g.field() == field)) throw ValidationError("frobenius_power: generator field mismatch");
    out.generators.push_back(g.exponent_scaled(q));
  }
  return out;
}

long graded_dim(const RingPresentation& ring, const IdealSpec& ideal, long m, Backend backend) {
  if (m < 0) throw ValidationError("graded_dim: degree must be >= 0");
  std::vector<Poly> gens;
  gens.reserve(ideal.generators.size());
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    if (!(g.field() == ring.field())) throw ValidationError("graded_dim: generator field mismatch");
    gens.push_back(g);
  }
  if (backend == Backend::rank) {
    const GradedRankEngine engine(ring.defining_poly());
    return engine.quotient_dim(gens, m);
  }
  // Generators above degree m cannot touch the degree-m piece; dropping them
  // keeps the truncated basis cheap and may empty the list entirely.
  std::vector<Poly> bounded;
  if (ring.defining_poly().degree() <= m) bounded.push_back(ring.defining_poly());
  for (auto& g : gens)
    if (g.degree() <= m) bounded.push_back(std::move(g));
  if (bounded.empty()) return monomial_count(m);
  const GroebnerBasis gb = buchberger_truncated(std::move(bounded), m);
  return standard_monomial_count(gb, m);
}

GroebnerBasis quotient_groebner(const RingPresentation& ring, const IdealSpec& ideal,
                                long truncation) {
  std::vector<Poly> gens;
  gens.reserve(ideal.generators.size() + 1);
  gens.push_back(ring.defining_poly());
  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    if (!(g.field() == ring.field()))
      throw ValidationError("quotient_groebner: generator field mismatch");
    gens.push_back(g);
  }
  return buchberger_truncated(std::move(gens), truncation);
}

long validate_finite_colength(const RingPresentation& ring, const IdealSpec& ideal,
                              long max_degree) {
  validate_ideal(ideal);
  if (ideal.generators.empty())
    throw ValidationError("finite colength: the zero ideal has infinite colength");
  const GradedRankEngine engine(ring.defining_poly());
  for (long m = 1; m <= max_degree; ++m)
    if (engine.quotient_dim(ideal.generators, m) == 0) return m;
  throw ValidationError("finite colength not certified: R/I is nonzero in every degree through " +
                        std::to_string(max_degree));
}

EmpiricalDensity empirical_density(const RingPresentation& ring, const IdealSpec& ideal, long n,
                                   long max_degree, long jobs) {
  if (n < 0) throw ValidationError("empirical_density: level must be >= 0");
  if (max_degree < 0) throw ValidationError("empirical_density: max_degree must be >= 0");
  validate_ideal(ideal);
  if (jobs < 1) jobs = 1;

  const long p = static_cast<long>(ring.field().p);
  const long q = power_within(p, n, std::max<long>(max_degree, 1));
  const IdealSpec Iq = frobenius_power(ideal, q, ring.field());
  long max_gen_degree = 0;
  for (const auto& g : ideal.generators) max_gen_degree = std::max(max_gen_degree, g.degree());
  const long horizon = q * max_gen_degree;

  EmpiricalDensity out;
  out.level = n;
  out.q = q;
  const GradedRankEngine engine(ring.defining_poly());

  // Evaluate degrees in blocks so parallel workers stay busy, then apply the
  // stop rule sequentially; the emitted samples never depend on block size.
  const long block = std::max<long>(2 * jobs, 8);
  long m = 0;
  while (true) {
    if (m > max_degree) {
      out.truncated = true;
      break;
    }
    const long hi = std::min(max_degree, m + block - 1);
    std::vector<long> dims(static_cast<size_t>(hi - m + 1));
    dims_parallel(engine, Iq.generators, m, dims, jobs);

    bool stopped = false;
    for (size_t i = 0; i < dims.size(); ++i) {
      const long deg = m + static_cast<long>(i);
      out.samples.emplace_back(deg, Rational(dims[i], q));
      const size_t k = out.samples.size();
      if (deg - 1 > horizon && k >= 2 && dims[i] == 0 &&
          out.samples[k - 2].second == Rational(0)) {
        stopped = true;
        break;
      }
    }
    if (stopped) break;
    m = hi + 1;
  }
  return out;
}

Rational empirical_f_threshold(const RingPresentation& ring, const IdealSpec& ideal, long q,
                               long max_degree, std::optional<long> hint) {
  validate_ideal(ideal);
  if (ideal.generators.empty())
    throw ValidationError("empirical_f_threshold: the zero ideal has no threshold");
  if (max_degree < 1) throw ValidationError("empirical_f_threshold: max_degree must be >= 1");

  const IdealSpec Iq = frobenius_power(ideal, q, ring.field());
  const GradedRankEngine engine(ring.defining_poly());
  const auto vanishes = [&](long m) { return engine.quotient_dim(Iq.generators, m) == 0; };

  // Bracket the first vanishing degree: (R/I^[q])_0 = F_p never vanishes, and
  // vanishing is upward-closed, so grow from the hint until a zero shows up.
  long lo = 0;
  long hi = std::clamp(hint.value_or(1), 1L, max_degree);
  long step = 2;
  while (!vanishes(hi)) {
    if (hi >= max_degree)
      throw BudgetExceeded("empirical_f_threshold: no vanishing degree through " +
                           std::to_string(max_degree) + " at q = " + std::to_string(q));
    lo = hi;
    hi = std::min(max_degree, hi + step);
    step *= 2;
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (vanishes(mid) ? hi : lo) = mid;
  }
  return Rational(hi - 1, q);
}

CompareReport compare_to_closed_form(const EmpiricalDensity& emp, const PiecewiseLinear& closed,
                                     const EnvelopePair& env) {
  if (env.grid != emp.q)
    throw ValidationError("compare_to_closed_form: sample grid q = " + std::to_string(emp.q) +
                          " does not match envelope grid " + env.grid.get_str());
  CompareReport report;
  report.truncated_input = emp.truncated;
  report.closed_support = support_end(closed);
  report.max_abs_deviation = Rational(0);
  for (const auto& [m, value] : emp.samples) {
    const Rational x(m, emp.q);
    const Rational deviation = (value - closed.value(x)).abs();
    if (deviation > report.max_abs_deviation) report.max_abs_deviation = deviation;
    if (value < env.lower.value(x) || value > env.upper.value(x))
      report.envelope_violations.push_back(m);
    if (value != Rational(0)) report.empirical_support = x;
  }
  report.within_envelope = report.envelope_violations.empty();
  return report;
}

}  // namespace hkd
