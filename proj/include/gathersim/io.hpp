#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gathersim/engine.hpp"

namespace gathersim {

using json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"r": "p/q", "s": "p/q", "d": int}; "/1" is omitted for integers. On
/// input "s" and "d" may be absent, and a bare integer or "p/q" string is
/// accepted as a rational. A "d" differing from radicand() is rejected.
json scalar_to_json(const FieldScalar& v);
FieldScalar scalar_from_json(const json& j);

/// Parses the exact text form produced by FieldScalar::to_string, e.g. "2",
/// "-1/2", "1/3√3", "1+2√3". "sqrt" is accepted in place of √.
FieldScalar scalar_from_text(const std::string& text);

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json points_to_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const json& j);

struct Scenario {
  long d = 3;
  Configuration config;
  DefectPolicy policy;
  std::string algorithm = "alg1";
  int max_rounds = 10;
  std::string adversary = "lowest-ids";
};

/// Parses a scenario object. "positions" may be replaced by "config": a
/// named configuration. Sets the process radicand to "d" (default 3) before
/// any coordinate is read.
Scenario scenario_from_json(const json& j);
json scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);

json verdict_to_json(const TraceVerdict& v);
TraceVerdict verdict_from_json(const json& j);

/// One JSON object per line: an optional {"header": {...}} line, one record
/// per round, then {"verdict": {...}}.
void write_trace(std::ostream& out, const Trace& trace, const std::optional<json>& header = std::nullopt);
void write_trace_file(const std::string& path, const Trace& trace, const std::optional<json>& header = std::nullopt);

struct TraceFile {
  std::optional<json> header;
  /// Round records carry before/observed/destinations; observations are
  /// not stored and stay empty.
  Trace trace;
};

TraceFile read_trace(std::istream& in);
TraceFile read_trace_file(const std::string& path);

/// {"algorithm", "model", "k", "tiebreak", "d"} for a trace header.
json run_header(const std::string& algorithm, const DefectPolicy& policy);

struct Report {
  std::string claim;
  std::string instance;
  std::uint64_t explored = 0;
  std::string verdict;
  int bound = 0;
  std::string trace_path;
  json details = json::object();
};

json report_to_json(const Report& r);

}  // namespace gathersim
