#include "hkd/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "hkd/config.hpp"
#include "hkd/density.hpp"
#include "hkd/errors.hpp"
#include "hkd/mu_reduction.hpp"
#include "hkd/oracle.hpp"
#include "hkd/serialize.hpp"

namespace hkd {

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  std::string format;   // empty: use the config's formats
  long max_n = -1;      // negative: use the config's value
  long max_degree = -1;
  long jobs = 1;
};

void attach_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "job configuration file")->required();
  cmd->add_option("--out", args.out_dir, "output directory (default: current)");
  cmd->add_option("--format", args.format, "csv or json; overrides outputs.formats")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--max-n", args.max_n, "cap on the Frobenius level for oracle runs");
  cmd->add_option("--max-degree", args.max_degree, "cap on graded degrees for oracle runs");
  cmd->add_option("--jobs", args.jobs, "parallel degree computations")
      ->check(CLI::PositiveNumber);
}

JobConfig load_with_overrides(const CommonArgs& args) {
  JobConfig config = load_job_config(args.config_path);
  if (!args.format.empty()) config.outputs.formats = {args.format};
  if (args.max_n >= 0) config.oracle.max_n = args.max_n;
  if (args.max_degree >= 0) config.oracle.max_degree = args.max_degree;
  return config;
}

bool wants(const JobConfig& config, const std::string& format) {
  const auto& formats = config.outputs.formats;
  return std::find(formats.begin(), formats.end(), format) != formats.end();
}

void write_out(const CommonArgs& args, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path path = std::filesystem::path(args.out_dir) / name;
  write_file_atomic(path, content);
  std::cout << "wrote " << path.string() << "\n";
}

std::optional<RingPresentation> ring_of(const JobConfig& config) {
  if (config.pair && config.pair->plane_curve) return make_ring(*config.pair->plane_curve);
  return std::nullopt;
}

Json warnings_json(const RingPresentation& ring) {
  Json arr = Json::array();
  for (const auto& w : ring.warnings()) arr.push_back(w);
  return arr;
}

int cmd_density(const CommonArgs& args) {
  const JobConfig config = load_with_overrides(args);
  const auto ring = ring_of(config);
  const SyzygyInput input = syzygy_input_of(config, ring ? &*ring : nullptr);
  if (!input.is_strong())
    throw ValidationError("config: v0_hn.strong must be true for density jobs");

  const StrongHNData& v0 = input.strong_v0();
  const StrongHNData m0 =
      strong_hn_of_generator_degrees(input.degrees(), input.curve(), v0.characteristic());
  const PiecewiseLinear fv = density_of_bundle(v0, input.curve());
  const PiecewiseLinear fm = density_of_bundle(m0, input.curve());
  const PiecewiseLinear pair = pair_density(input);
  const Rational alpha = threshold_alpha(input);

  Json j;
  j["command"] = "density";
  j["warnings"] = ring ? warnings_json(*ring) : Json::array();
  j["support_endpoint"] = to_json(alpha);
  j["v_density"] = to_json(fv);
  j["m_density"] = to_json(fm);
  j["pair_density"] = to_json(pair);
  if (wants(config, "json"))
    write_out(args, config.outputs.basename + ".density.json", j.dump(2) + "\n");
  if (wants(config, "csv"))
    write_out(args, config.outputs.basename + ".pair_density.csv", to_csv(pair));
  std::cout << "support_endpoint " << alpha << "\n";
  return 0;
}

int cmd_threshold(const CommonArgs& args) {
  const JobConfig config = load_with_overrides(args);
  const auto ring = ring_of(config);
  const SyzygyInput input = syzygy_input_of(config, ring ? &*ring : nullptr);

  Json j;
  j["command"] = "threshold";
  j["warnings"] = ring ? warnings_json(*ring) : Json::array();
  if (input.is_strong()) {
    const Rational alpha = threshold_alpha(input);
    j["threshold_alpha"] = to_json(alpha);
    j["peel"] = to_json(peel_mu_reduction(input));
    std::cout << "threshold_alpha " << alpha << "\n";
  } else {
    const AlphaInfinityReport report = alpha_infinity_report(input);
    j["alpha_infinity_report"] = to_json(report);
    std::cout << "alpha_infinity " << report.alpha_infinity << "\n";
  }
  write_out(args, config.outputs.basename + ".threshold.json", j.dump(2) + "\n");
  return 0;
}

int cmd_oracle_compare(const CommonArgs& args) {
  const JobConfig config = load_with_overrides(args);
  if (!config.oracle.enabled)
    throw ValidationError("config: oracle.enabled must be true for oracle-compare");
  if (!config.pair || !config.pair->plane_curve)
    throw ValidationError("config: pair.plane_curve is required for oracle jobs");
  if (!config.ideal || !config.ideal->generators)
    throw ValidationError("config: ideal.generators (polynomials) are required for oracle jobs");

  const RingPresentation ring = make_ring(*config.pair->plane_curve);
  const IdealSpec ideal = parse_ideal(*config.ideal->generators, ring);
  const SyzygyInput input = syzygy_input_of(config, &ring);
  if (!input.is_strong())
    throw ValidationError("config: v0_hn.strong must be true for oracle-compare");
  const long witness = input.strong_v0().frobenius_level();

  validate_finite_colength(ring, ideal, config.oracle.max_degree);
  const PiecewiseLinear closed = pair_density(input);
  const Rational alpha = threshold_alpha(input);

  Json j;
  j["command"] = "oracle-compare";
  j["warnings"] = warnings_json(ring);
  j["alpha"] = to_json(alpha);
  Json levels = Json::array();
  bool envelope_breached = false;
  bool backends_disagree = false;
  bool truncated = false;

  for (long n = 0; n <= config.oracle.max_n; ++n) {
    const EmpiricalDensity emp =
        empirical_density(ring, ideal, n, config.oracle.max_degree, args.jobs);
    truncated = truncated || emp.truncated;

    Json entry;
    entry["n"] = n;
    entry["q"] = emp.q;
    entry["truncated"] = emp.truncated;

    const long hint = static_cast<long>((alpha * Rational(emp.q)).floor().get_si()) + 1;
    const Rational r_q =
        empirical_f_threshold(ring, ideal, emp.q, config.oracle.max_degree, hint);
    entry["empirical_threshold"] = to_json(r_q);
    entry["threshold_deviation"] = to_json((r_q - alpha).abs());

    if (n >= witness) {
      const EnvelopePair envelope = pair_envelope(input, n - witness);
      const CompareReport report = compare_to_closed_form(emp, closed, envelope);
      entry["compare"] = to_json(report);
      envelope_breached = envelope_breached || !report.within_envelope;
    } else {
      // No finite-level band exists below the witnessing level of the data.
      entry["compare"] = nullptr;
    }

    if (config.oracle.cross_check && !emp.samples.empty()) {
      const IdealSpec Iq = frobenius_power(ideal, emp.q, ring.field());
      const long top = std::min<long>(60, emp.samples.back().first);
      const GroebnerBasis gb = quotient_groebner(ring, Iq, std::max<long>(top, 1));
      bool agree = true;
      for (long m = 0; m <= top && agree; ++m)
        agree = standard_monomial_count(gb, m) == graded_dim(ring, Iq, m, Backend::rank);
      Json cross;
      cross["through_degree"] = top;
      cross["agree"] = agree;
      entry["cross_check"] = cross;
      backends_disagree = backends_disagree || !agree;
    }

    if (wants(config, "csv"))
      write_out(args, config.outputs.basename + ".f_n" + std::to_string(n) + ".csv",
                to_csv(emp));
    levels.push_back(std::move(entry));
  }
  j["levels"] = std::move(levels);
  if (wants(config, "json"))
    write_out(args, config.outputs.basename + ".compare.json", j.dump(2) + "\n");

  if (backends_disagree)
    throw InvariantViolation("oracle-compare: rank and groebner backends disagree");
  if (envelope_breached)
    throw InvariantViolation("oracle-compare: empirical samples breach the finite-level envelope");
  if (truncated)
    throw BudgetExceeded("oracle-compare: density sampling truncated at max_degree " +
                         std::to_string(config.oracle.max_degree) + "; reports are partial");
  std::cout << "alpha " << alpha << "\n";
  return 0;
}

int cmd_klein(const CommonArgs& args) {
  const JobConfig config = load_with_overrides(args);
  if (!config.klein)
    throw ValidationError("config: the klein section is required for the klein command");

  Json j;
  j["command"] = "klein";
  Json families = Json::array();
  for (const long d : config.klein->d_values) {
    if (d < 17 || d % 2 == 0)
      throw ValidationError("config: klein.d_values entries must be odd and >= 17, got " +
                            std::to_string(d));
    const long genus = (d - 1) * (d - 2) / 2;
    Json family;
    family["d"] = d;
    family["genus"] = genus;
    Json entries = Json::array();

    Integer p = Integer(d) * Integer(d);
    const Integer scan_limit = p * 1000;
    long found = 0;
    while (found < config.klein->primes_per_d) {
      if (p > scan_limit)
        throw BudgetExceeded("klein: no further valid primes below " + scan_limit.get_str() +
                             " for d = " + std::to_string(d));
      if (klein_parameter_problems(d, p).empty()) {
        const Rational c_p = klein_threshold(d, p);
        const DenominatorReport report = threshold_denominator_report(c_p, Rational(3, 2), p, genus, 2);
        Json entry;
        entry["p"] = p.get_str();
        entry["c_p"] = to_json(c_p);
        entry["report"] = to_json(report);
        entries.push_back(std::move(entry));
        ++found;
        std::cout << "klein d=" << d << " p=" << p.get_str() << " gcd_ok "
                  << (report.gcd_ok ? "true" : "false") << " bound_ok "
                  << (report.bound_ok ? "true" : "false") << "\n";
      }
      p += 1;
    }
    family["entries"] = std::move(entries);
    families.push_back(std::move(family));
  }
  j["families"] = std::move(families);
  write_out(args, config.outputs.basename + ".klein.json", j.dump(2) + "\n");
  return 0;
}

void print_error(const std::string& type, const std::string& message) {
  Json j;
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  std::cerr << j.dump(2) << "\n";
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"exact Hilbert-Kunz density and F-threshold toolkit"};
  app.require_subcommand(1);

  CommonArgs args;
  CLI::App* density = app.add_subcommand("density", "closed-form pair density and support");
  CLI::App* threshold =
      app.add_subcommand("threshold", "F-threshold from slope data (finite p or limit)");
  CLI::App* oracle_compare = app.add_subcommand(
      "oracle-compare", "brute-force graded lengths against the closed forms");
  CLI::App* klein = app.add_subcommand("klein", "denominator checks for the Klein-type family");
  for (CLI::App* cmd : {density, threshold, oracle_compare, klein}) attach_common(cmd, args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (density->parsed()) return cmd_density(args);
    if (threshold->parsed()) return cmd_threshold(args);
    if (oracle_compare->parsed()) return cmd_oracle_compare(args);
    return cmd_klein(args);
  } catch (const ValidationError& e) {
    print_error("validation", e.what());
    return 2;
  } catch (const BudgetExceeded& e) {
    print_error("budget", e.what());
    return 3;
  } catch (const InvariantViolation& e) {
    print_error("invariant", e.what());
    return 4;
  }
}

}  // namespace hkd
