#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hkd/hn_data.hpp"
#include "hkd/oracle.hpp"
#include "hkd/serialize.hpp"

namespace hkd {

// Abstract curve: just the numbers the closed forms need.
struct CurveSpec {
  long genus = 0;
  long degree = 1;
};

// Explicit curve the oracle can compute on.
struct PlaneCurveSpec {
  std::string poly;
  uint32_t characteristic = 2;
  std::array<std::string, 3> variables{"x", "y", "z"};
};

struct PairSpec {
  std::optional<CurveSpec> curve;
  std::optional<PlaneCurveSpec> plane_curve;  // exactly one of the two is set
};

struct IdealConfig {
  std::optional<std::vector<long>> generator_degrees;
  std::optional<std::vector<std::string>> generators;  // exactly one of the two is set
};

struct V0Config {
  std::vector<Rational> slopes;
  std::vector<long> ranks;
  bool strong = false;
  std::optional<Integer> characteristic;  // defaults to the plane-curve characteristic
  long frobenius_level = 0;
};

struct OracleConfig {
  bool enabled = true;
  long max_n = 2;
  long max_degree = 400;
  Backend backend = Backend::rank;
  bool cross_check = false;
};

struct OutputConfig {
  std::string basename = "job";
  std::vector<std::string> formats{"json"};
};

struct KleinConfig {
  std::vector<long> d_values;
  long primes_per_d = 3;
};

struct JobConfig {
  std::optional<PairSpec> pair;
  std::optional<IdealConfig> ideal;
  std::optional<V0Config> v0_hn;
  OracleConfig oracle;
  OutputConfig outputs;
  std::optional<KleinConfig> klein;
};

Backend backend_from_string(const std::string& name);

// Strict parse: unknown keys and malformed values are validation errors that
// name the offending field.
JobConfig parse_job_config(const Json& j);
JobConfig load_job_config(const std::filesystem::path& path);

// Materialization. `ring` may be null when the pair is an abstract curve;
// operations that genuinely need polynomials say which field to fill in.
RingPresentation make_ring(const PlaneCurveSpec& spec);
CurveData curve_of(const JobConfig& config, const RingPresentation* ring);
GeneratorDegrees generator_degrees_of(const JobConfig& config, const RingPresentation* ring);
AnyHNData v0_of(const JobConfig& config);
SyzygyInput syzygy_input_of(const JobConfig& config, const RingPresentation* ring);

}  // namespace hkd
