#include "hkd/config.hpp"

#include <algorithm>
#include <initializer_list>
#include <string_view>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

void expect_keys(const Json& j, const std::string& where,
                 std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ValidationError("config: " + where + " must be an object");
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      throw ValidationError("config: unknown key '" + item.key() + "' in " + where);
  }
}

long config_long(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ValidationError("config: " + where + " must be an integer");
  return j.get<long>();
}

bool config_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw ValidationError("config: " + where + " must be a boolean");
  return j.get<bool>();
}

std::string config_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError("config: " + where + " must be a string");
  return j.get<std::string>();
}

Rational config_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError("config: " + where + ": " + e.what());
    }
  }
  throw ValidationError("config: " + where + " must be an integer or a 'n/d' string");
}

Integer config_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw ValidationError("config: " + where + " is not an integer");
    }
  }
  throw ValidationError("config: " + where + " must be an integer or a decimal string");
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw ValidationError("config: " + where + " must be a nonempty array");
  return j;
}

PairSpec parse_pair(const Json& j) {
  expect_keys(j, "pair", {"curve", "plane_curve"});
  PairSpec pair;
  if (j.contains("curve")) {
    expect_keys(j["curve"], "pair.curve", {"genus", "degree"});
    pair.curve = CurveSpec{config_long(j["curve"].at("genus"), "pair.curve.genus"),
                           config_long(j["curve"].at("degree"), "pair.curve.degree")};
  }
  if (j.contains("plane_curve")) {
    expect_keys(j["plane_curve"], "pair.plane_curve", {"poly", "char", "variables"});
    PlaneCurveSpec spec;
    spec.poly = config_string(j["plane_curve"].at("poly"), "pair.plane_curve.poly");
    const long characteristic = config_long(j["plane_curve"].at("char"), "pair.plane_curve.char");
    if (characteristic < 2)
      throw ValidationError("config: pair.plane_curve.char must be a prime >= 2");
    spec.characteristic = static_cast<uint32_t>(characteristic);
    if (j["plane_curve"].contains("variables")) {
      const auto& vars = require_array(j["plane_curve"]["variables"], "pair.plane_curve.variables");
      if (vars.size() != 3)
        throw ValidationError("config: pair.plane_curve.variables must list 3 names");
      for (size_t i = 0; i < 3; ++i)
        spec.variables[i] = config_string(vars[i], "pair.plane_curve.variables");
    }
    pair.plane_curve = std::move(spec);
  }
  if (pair.curve.has_value() == pair.plane_curve.has_value())
    throw ValidationError("config: pair needs exactly one of 'curve' or 'plane_curve'");
  return pair;
}

IdealConfig parse_ideal_config(const Json& j) {
  expect_keys(j, "ideal", {"generator_degrees", "generators"});
  IdealConfig ideal;
  if (j.contains("generator_degrees")) {
    std::vector<long> degrees;
    for (const auto& v : require_array(j["generator_degrees"], "ideal.generator_degrees"))
      degrees.push_back(config_long(v, "ideal.generator_degrees"));
    ideal.generator_degrees = std::move(degrees);
  }
  if (j.contains("generators")) {
    std::vector<std::string> gens;
    for (const auto& v : require_array(j["generators"], "ideal.generators"))
      gens.push_back(config_string(v, "ideal.generators"));
    ideal.generators = std::move(gens);
  }
  if (ideal.generator_degrees.has_value() == ideal.generators.has_value())
    throw ValidationError(
        "config: ideal needs exactly one of 'generator_degrees' or 'generators'");
  return ideal;
}

V0Config parse_v0(const Json& j) {
  expect_keys(j, "v0_hn", {"slopes", "ranks", "strong", "characteristic", "frobenius_level"});
  V0Config v0;
  for (const auto& s : require_array(j.at("slopes"), "v0_hn.slopes"))
    v0.slopes.push_back(config_rational(s, "v0_hn.slopes"));
  for (const auto& r : require_array(j.at("ranks"), "v0_hn.ranks"))
    v0.ranks.push_back(config_long(r, "v0_hn.ranks"));
  if (v0.slopes.size() != v0.ranks.size())
    throw ValidationError("config: v0_hn.slopes and v0_hn.ranks must have equal length");
  if (j.contains("strong")) v0.strong = config_bool(j["strong"], "v0_hn.strong");
  if (j.contains("characteristic"))
    v0.characteristic = config_integer(j["characteristic"], "v0_hn.characteristic");
  if (j.contains("frobenius_level"))
    v0.frobenius_level = config_long(j["frobenius_level"], "v0_hn.frobenius_level");
  if (!v0.strong && v0.characteristic)
    throw ValidationError("config: v0_hn.characteristic needs v0_hn.strong = true");
  if (!v0.strong && v0.frobenius_level != 0)
    throw ValidationError("config: v0_hn.frobenius_level needs v0_hn.strong = true");
  return v0;
}

OracleConfig parse_oracle(const Json& j) {
  expect_keys(j, "oracle", {"enabled", "max_n", "max_degree", "backend", "cross_check"});
  OracleConfig oracle;
  if (j.contains("enabled")) oracle.enabled = config_bool(j["enabled"], "oracle.enabled");
  if (j.contains("max_n")) oracle.max_n = config_long(j["max_n"], "oracle.max_n");
  if (j.contains("max_degree"))
    oracle.max_degree = config_long(j["max_degree"], "oracle.max_degree");
  if (j.contains("backend"))
    oracle.backend = backend_from_string(config_string(j["backend"], "oracle.backend"));
  if (j.contains("cross_check"))
    oracle.cross_check = config_bool(j["cross_check"], "oracle.cross_check");
  if (oracle.max_n < 0) throw ValidationError("config: oracle.max_n must be >= 0");
  if (oracle.max_degree < 0) throw ValidationError("config: oracle.max_degree must be >= 0");
  return oracle;
}

OutputConfig parse_outputs(const Json& j) {
  expect_keys(j, "outputs", {"basename", "formats"});
  OutputConfig outputs;
  if (j.contains("basename")) {
    outputs.basename = config_string(j["basename"], "outputs.basename");
    if (outputs.basename.empty() ||
        outputs.basename.find_first_of("/\\") != std::string::npos)
      throw ValidationError("config: outputs.basename must be a bare file name");
  }
  if (j.contains("formats")) {
    outputs.formats.clear();
    for (const auto& f : require_array(j["formats"], "outputs.formats")) {
      const std::string fmt = config_string(f, "outputs.formats");
      if (fmt != "csv" && fmt != "json")
        throw ValidationError("config: outputs.formats entries must be 'csv' or 'json'");
      outputs.formats.push_back(fmt);
    }
  }
  return outputs;
}

KleinConfig parse_klein(const Json& j) {
  expect_keys(j, "klein", {"d_values", "primes_per_d"});
  KleinConfig klein;
  for (const auto& d : require_array(j.at("d_values"), "klein.d_values"))
    klein.d_values.push_back(config_long(d, "klein.d_values"));
  if (j.contains("primes_per_d"))
    klein.primes_per_d = config_long(j["primes_per_d"], "klein.primes_per_d");
  if (klein.primes_per_d < 1) throw ValidationError("config: klein.primes_per_d must be >= 1");
  return klein;
}

}  // namespace

Backend backend_from_string(const std::string& name) {
  if (name == "rank") return Backend::rank;
  if (name == "groebner") return Backend::groebner;
  throw ValidationError("config: backend must be 'rank' or 'groebner', got '" + name + "'");
}

JobConfig parse_job_config(const Json& j) {
  expect_keys(j, "top level", {"pair", "ideal", "v0_hn", "oracle", "outputs", "klein"});
  JobConfig config;
  if (j.contains("pair")) config.pair = parse_pair(j["pair"]);
  if (j.contains("ideal")) config.ideal = parse_ideal_config(j["ideal"]);
  if (j.contains("v0_hn")) config.v0_hn = parse_v0(j["v0_hn"]);
  if (j.contains("oracle")) config.oracle = parse_oracle(j["oracle"]);
  if (j.contains("outputs")) config.outputs = parse_outputs(j["outputs"]);
  if (j.contains("klein")) config.klein = parse_klein(j["klein"]);
  return config;
}

JobConfig load_job_config(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("config: " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_job_config(j);
}

RingPresentation make_ring(const PlaneCurveSpec& spec) {
  return RingPresentation::make(spec.characteristic, spec.poly, spec.variables);
}

CurveData curve_of(const JobConfig& config, const RingPresentation* ring) {
  if (!config.pair) throw ValidationError("config: pair is required");
  if (config.pair->plane_curve) {
    if (ring) return ring->curve();
    return make_ring(*config.pair->plane_curve).curve();
  }
  return CurveData(config.pair->curve->genus, config.pair->curve->degree);
}

GeneratorDegrees generator_degrees_of(const JobConfig& config, const RingPresentation* ring) {
  if (!config.ideal) throw ValidationError("config: ideal is required");
  if (config.ideal->generator_degrees) return GeneratorDegrees(*config.ideal->generator_degrees);
  if (!ring)
    throw ValidationError(
        "config: ideal.generators need pair.plane_curve to parse; "
        "give ideal.generator_degrees instead");
  const IdealSpec ideal = parse_ideal(*config.ideal->generators, *ring);
  return GeneratorDegrees(ideal.degrees());
}

AnyHNData v0_of(const JobConfig& config) {
  if (!config.v0_hn)
    throw ValidationError("config: v0_hn is required for closed-form jobs");
  const V0Config& v0 = *config.v0_hn;
  std::vector<HNPiece> pieces;
  pieces.reserve(v0.slopes.size());
  for (size_t i = 0; i < v0.slopes.size(); ++i) pieces.push_back({v0.slopes[i], v0.ranks[i]});
  if (!v0.strong) return HNData(std::move(pieces));
  Integer characteristic;
  if (v0.characteristic) {
    characteristic = *v0.characteristic;
  } else if (config.pair && config.pair->plane_curve) {
    characteristic = Integer(static_cast<long>(config.pair->plane_curve->characteristic));
  } else {
    throw ValidationError(
        "config: v0_hn.characteristic is required when strong and the pair is an abstract curve");
  }
  return StrongHNData(std::move(pieces), characteristic, v0.frobenius_level);
}

SyzygyInput syzygy_input_of(const JobConfig& config, const RingPresentation* ring) {
  return validate_syzygy_hn(v0_of(config), generator_degrees_of(config, ring),
                            curve_of(config, ring));
}

}  // namespace hkd
