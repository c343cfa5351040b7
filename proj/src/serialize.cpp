#include "hkd/serialize.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include "hkd/errors.hpp"

namespace hkd {

namespace {

Integer integer_from_string(const std::string& s) {
  try {
    return Integer(s, 10);
  } catch (const std::invalid_argument&) {
    throw ValidationError("not an integer: '" + s + "'");
  }
}

Integer integer_from_json(const Json& j) {
  if (!j.is_string()) throw ValidationError("expected an integer as a decimal string");
  return integer_from_string(j.get<std::string>());
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text, const std::string& header,
                                               size_t columns) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      if (line != header) throw ValidationError("csv: expected header '" + header + "'");
      first = false;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != columns)
      throw ValidationError("csv: expected " + std::to_string(columns) + " fields, got " +
                            std::to_string(fields.size()));
    rows.push_back(std::move(fields));
  }
  if (first) throw ValidationError("csv: empty input");
  return rows;
}

constexpr const char* kPiecewiseHeader =
    "breakpoint_num,breakpoint_den,slope_num,slope_den,intercept_num,intercept_den";
constexpr const char* kEmpiricalHeader = "m,q,value_num,value_den";

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ValidationError("expected a rational as a string 'n' or 'n/d'");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const PiecewiseLinear& f) {
  Json j;
  j["domain_floor"] = f.domain_floor() ? Json(to_json(*f.domain_floor())) : Json(nullptr);
  Json breaks = Json::array();
  for (const auto& b : f.breakpoints()) breaks.push_back(to_json(b));
  j["breakpoints"] = std::move(breaks);
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    Json piece;
    piece["slope"] = to_json(p.slope);
    piece["intercept"] = to_json(p.intercept);
    pieces.push_back(std::move(piece));
  }
  j["pieces"] = std::move(pieces);
  return j;
}

PiecewiseLinear piecewise_from_json(const Json& j) {
  std::optional<Rational> floor;
  if (!j.at("domain_floor").is_null()) floor = rational_from_json(j.at("domain_floor"));
  std::vector<Rational> breaks;
  for (const auto& b : j.at("breakpoints")) breaks.push_back(rational_from_json(b));
  std::vector<AffinePiece> pieces;
  for (const auto& p : j.at("pieces"))
    pieces.push_back({rational_from_json(p.at("slope")), rational_from_json(p.at("intercept"))});
  return PiecewiseLinear(std::move(breaks), std::move(pieces), std::move(floor));
}

std::string to_csv(const PiecewiseLinear& f) {
  std::ostringstream out;
  out << kPiecewiseHeader << '\n';
  const auto& pieces = f.pieces();
  const auto& breaks = f.breakpoints();
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) {
      if (f.domain_floor())
        out << f.domain_floor()->num().get_str() << ',' << f.domain_floor()->den().get_str();
      else
        out << "0,0";
    } else {
      out << breaks[i - 1].num().get_str() << ',' << breaks[i - 1].den().get_str();
    }
    out << ',' << pieces[i].slope.num().get_str() << ',' << pieces[i].slope.den().get_str() << ','
        << pieces[i].intercept.num().get_str() << ',' << pieces[i].intercept.den().get_str()
        << '\n';
  }
  return out.str();
}

PiecewiseLinear piecewise_from_csv(const std::string& text) {
  const auto rows = csv_rows(text, kPiecewiseHeader, 6);
  if (rows.empty()) throw ValidationError("csv: no piece rows");
  std::optional<Rational> floor;
  std::vector<Rational> breaks;
  std::vector<AffinePiece> pieces;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const Integer bnum = integer_from_string(r[0]);
    const Integer bden = integer_from_string(r[1]);
    if (i == 0) {
      if (bden != 0) floor = Rational(bnum, bden);
    } else {
      breaks.emplace_back(bnum, bden);
    }
    pieces.push_back({Rational(integer_from_string(r[2]), integer_from_string(r[3])),
                      Rational(integer_from_string(r[4]), integer_from_string(r[5]))});
  }
  return PiecewiseLinear(std::move(breaks), std::move(pieces), std::move(floor));
}

namespace {

Json pieces_to_json(std::span<const HNPiece> pieces) {
  Json arr = Json::array();
  for (const auto& p : pieces) {
    Json piece;
    piece["slope"] = to_json(p.slope);
    piece["rank"] = p.rank;
    arr.push_back(std::move(piece));
  }
  return arr;
}

std::vector<HNPiece> pieces_from_json(const Json& arr) {
  std::vector<HNPiece> pieces;
  for (const auto& p : arr)
    pieces.push_back({rational_from_json(p.at("slope")), p.at("rank").get<long>()});
  return pieces;
}

}  // namespace

Json to_json(const HNData& data) {
  Json j;
  j["kind"] = "plain";
  j["pieces"] = pieces_to_json(data.pieces());
  return j;
}

Json to_json(const StrongHNData& data) {
  Json j;
  j["kind"] = "strong";
  j["pieces"] = pieces_to_json(data.pieces());
  j["characteristic"] = data.characteristic().get_str();
  j["frobenius_level"] = data.frobenius_level();
  return j;
}

Json to_json(const AnyHNData& data) {
  return std::visit([](const auto& d) { return to_json(d); }, data);
}

AnyHNData hn_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  auto pieces = pieces_from_json(j.at("pieces"));
  if (kind == "plain") return HNData(std::move(pieces));
  if (kind == "strong")
    return StrongHNData(std::move(pieces), integer_from_json(j.at("characteristic")),
                        j.at("frobenius_level").get<long>());
  throw ValidationError("hn data: unknown kind '" + kind + "'");
}

Json to_json(const PeelResult& result) {
  Json j;
  j["t"] = result.t;
  j["case"] = to_string(result.case_tag);
  j["a_min_vt"] = to_json(result.a_min_vt);
  j["vt"] = to_json(result.vt_data);
  return j;
}

Json to_json(const AlphaInfinityReport& report) {
  Json j;
  j["alpha_infinity"] = to_json(report.alpha_infinity);
  j["t"] = report.t;
  j["controlling_index"] = report.controlling_index;
  j["predicted_cp_form"] = report.predicted_cp_form;
  return j;
}

Json to_json(const DenominatorReport& report) {
  Json j;
  j["equality"] = report.equality;
  j["residual"] = to_json(report.residual);
  j["a"] = report.a.get_str();
  j["b"] = report.b.get_str();
  j["gcd_ok"] = report.gcd_ok;
  j["bound_ok"] = report.bound_ok;
  j["cp_denominator"] = report.cp_denominator.get_str();
  j["cp_denominator_p_valuation"] = report.cp_denominator_p_valuation;
  return j;
}

Json to_json(const CompareReport& report) {
  Json j;
  j["max_abs_deviation"] = to_json(report.max_abs_deviation);
  j["envelope_violations"] = report.envelope_violations;
  j["empirical_support"] =
      report.empirical_support ? Json(to_json(*report.empirical_support)) : Json(nullptr);
  j["closed_support"] = to_json(report.closed_support);
  j["within_envelope"] = report.within_envelope;
  j["truncated_input"] = report.truncated_input;
  return j;
}

Json to_json(const EnvelopePair& envelope) {
  Json j;
  j["level"] = envelope.level;
  j["witness_level"] = envelope.witness_level;
  j["grid"] = envelope.grid.get_str();
  j["lower"] = to_json(envelope.lower);
  j["upper"] = to_json(envelope.upper);
  return j;
}

Json to_json(const EmpiricalDensity& density) {
  Json j;
  j["level"] = density.level;
  j["q"] = density.q;
  j["truncated"] = density.truncated;
  Json samples = Json::array();
  for (const auto& [m, value] : density.samples) {
    Json row;
    row["m"] = m;
    row["value"] = to_json(value);
    samples.push_back(std::move(row));
  }
  j["samples"] = std::move(samples);
  return j;
}

EmpiricalDensity empirical_from_json(const Json& j) {
  EmpiricalDensity density;
  density.level = j.at("level").get<long>();
  density.q = j.at("q").get<long>();
  density.truncated = j.at("truncated").get<bool>();
  for (const auto& row : j.at("samples"))
    density.samples.emplace_back(row.at("m").get<long>(), rational_from_json(row.at("value")));
  return density;
}

std::string to_csv(const EmpiricalDensity& density) {
  std::ostringstream out;
  out << kEmpiricalHeader << '\n';
  for (const auto& [m, value] : density.samples)
    out << m << ',' << density.q << ',' << value.num().get_str() << ',' << value.den().get_str()
        << '\n';
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  static std::atomic<unsigned> sequence{0};
  const std::filesystem::path tmp =
      path.string() + ".tmp." + std::to_string(sequence.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open for writing: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw ValidationError("short write: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ValidationError("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open: " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace hkd
