#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hkd/density.hpp"
#include "hkd/hn_data.hpp"
#include "hkd/mu_reduction.hpp"
#include "hkd/oracle.hpp"
#include "hkd/piecewise.hpp"

namespace hkd {

// Insertion-ordered so a fixed job always produces the same bytes.
using Json = nlohmann::ordered_json;

// Rationals travel as canonical strings "n" or "n/d"; integers as decimal
// strings (they can exceed 64 bits).
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const PiecewiseLinear& f);
PiecewiseLinear piecewise_from_json(const Json& j);

// One row per piece, keyed by its left endpoint:
//   breakpoint_num,breakpoint_den,slope_num,slope_den,intercept_num,intercept_den
// The first row carries the domain floor, or the 0/0 sentinel when the
// function is unbounded on the left.
std::string to_csv(const PiecewiseLinear& f);
PiecewiseLinear piecewise_from_csv(const std::string& text);

Json to_json(const HNData& data);
Json to_json(const StrongHNData& data);
Json to_json(const AnyHNData& data);
AnyHNData hn_from_json(const Json& j);

Json to_json(const PeelResult& result);
Json to_json(const AlphaInfinityReport& report);
Json to_json(const DenominatorReport& report);
Json to_json(const CompareReport& report);
Json to_json(const EnvelopePair& envelope);

Json to_json(const EmpiricalDensity& density);
EmpiricalDensity empirical_from_json(const Json& j);
// Rows m,q,value_num,value_den.
std::string to_csv(const EmpiricalDensity& density);

// Write via a temp file in the same directory plus rename, so readers never
// observe a half-written artifact.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace hkd
