#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkd/density.hpp"
#include "hkd/groebner.hpp"
#include "hkd/linalg.hpp"
#include "hkd/poly.hpp"

namespace hkd {

// Homogeneous coordinate ring F_p[x,y,z] / (h) of a plane curve of degree d,
// polarized by O(1). Genus is the plane-curve value (d-1)(d-2)/2, which is
// only meaningful when the curve is smooth; the constructor runs a Jacobian
// check and records a warning instead of failing when it cannot certify that.
class RingPresentation {
public:
  static RingPresentation make(uint32_t characteristic, const std::string& defining_poly,
                               const std::array<std::string, 3>& variables = {"x", "y", "z"});

  const PrimeField& field() const { return F_; }
  const Poly& defining_poly() const { return h_; }
  long degree() const { return degree_; }
  long genus() const { return genus_; }
  CurveData curve() const { return {genus_, degree_}; }
  const std::array<std::string, 3>& variables() const { return vars_; }
  // Empty when the Jacobian check certified smoothness.
  const std::vector<std::string>& warnings() const { return warnings_; }

private:
  RingPresentation(PrimeField F, Poly h, std::array<std::string, 3> vars);

  PrimeField F_;
  Poly h_;
  long degree_ = 0;
  long genus_ = 0;
  std::array<std::string, 3> vars_;
  std::vector<std::string> warnings_;
};

// Homogeneous generators of a graded ideal. An empty list is the zero ideal.
struct IdealSpec {
  std::vector<Poly> generators;

  std::vector<long> degrees() const;
};

// Every generator nonzero of degree >= 1 (the zero ideal, with no
// generators at all, passes).
void validate_ideal(const IdealSpec& ideal);

IdealSpec parse_ideal(const std::vector<std::string>& generator_texts,
                      const RingPresentation& ring);

// Exponent-scale every generator by q, which over F_p equals raising it to
// the q-th power. Rejects q that is not a power of the field characteristic.
IdealSpec frobenius_power(const IdealSpec& ideal, long q, const PrimeField& field);

enum class Backend { rank, groebner };

// dim over F_p of (R / I)_m. The rank backend eliminates candidate rows over
// the degree-m monomial basis; the groebner backend counts standard monomials
// of a degree-truncated basis of (h) + I. They are independent computations
// and must agree.
long graded_dim(const RingPresentation& ring, const IdealSpec& ideal, long m,
                Backend backend = Backend::rank);

// Truncated basis of (h) + I, for bulk standard-monomial queries at many
// degrees without re-running Buchberger.
GroebnerBasis quotient_groebner(const RingPresentation& ring, const IdealSpec& ideal,
                                long truncation);

// First degree at which (R/I)_m = 0, certifying finite colength (once a
// graded piece of a standard graded quotient vanishes, all later ones do).
// ValidationError when no such degree shows up through max_degree: the
// colength may be infinite, or the budget too small to tell.
long validate_finite_colength(const RingPresentation& ring, const IdealSpec& ideal,
                              long max_degree);

struct EmpiricalDensity {
  long level = 0;  // n, with q = p^n
  long q = 1;
  std::vector<std::pair<long, Rational>> samples;  // (m, l(R/I^[q])_m / q)
  bool truncated = false;  // degree budget hit before the tail of zeros
};

// Samples l(R/I^[q])_m / q for m = 0, 1, 2, ... and stops after two
// consecutive zero values past the horizon q * (largest generator degree).
// Degrees beyond max_degree are not computed; hitting that cap sets
// truncated on the partial result instead of failing. jobs > 1 evaluates
// degrees in parallel; the sample list is the same regardless.
EmpiricalDensity empirical_density(const RingPresentation& ring, const IdealSpec& ideal,
                                   long n, long max_degree, long jobs = 1);

// (m0 - 1) / q where m0 = min { m : (R/I^[q])_m = 0 }: every form of degree
// m0 lies in (h) + I^[q] and some form of degree m0 - 1 does not. Monotone
// bisection seeded at hint when given, with exponential growth fallback;
// BudgetExceeded when the bracket passes max_degree.
Rational empirical_f_threshold(const RingPresentation& ring, const IdealSpec& ideal, long q,
                               long max_degree, std::optional<long> hint = std::nullopt);

struct CompareReport {
  Rational max_abs_deviation;
  std::vector<long> envelope_violations;  // sample degrees m outside the band
  std::optional<Rational> empirical_support;  // largest m/q with a nonzero sample
  Rational closed_support;
  bool within_envelope = false;
  bool truncated_input = false;
};

// Samples against the closed-form density: max pointwise deviation at the
// grid points m/q, envelope violations, and the two support endpoints.
// Requires emp.q == env.grid so the band actually applies to the samples.
CompareReport compare_to_closed_form(const EmpiricalDensity& emp, const PiecewiseLinear& closed,
                                     const EnvelopePair& env);

}  // namespace hkd
