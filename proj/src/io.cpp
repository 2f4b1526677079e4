#include "gathersim/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "gathersim/configs.hpp"

namespace gathersim {

namespace {

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key)) return Rational(0);
  const json& v = j.at(key);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  throw FormatError(std::string("field '") + key + "' must be a string or integer");
}

template <class F>
auto rethrow_as_format(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError&) {
    throw;
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

json scalar_to_json(const FieldScalar& v) {
  return {{"r", rational_to_string(v.rat())}, {"s", rational_to_string(v.coef())}, {"d", radicand()}};
}

FieldScalar scalar_from_json(const json& j) {
  return rethrow_as_format([&] {
    if (j.is_number_integer()) return FieldScalar(j.get<long>());
    if (j.is_string()) return FieldScalar(rational_from_string(j.get<std::string>()));
    if (!j.is_object()) throw FormatError("scalar must be an object, integer or rational string");
    if (j.contains("d") && j.at("d").get<long>() != radicand()) {
      throw FormatError("scalar radicand " + std::to_string(j.at("d").get<long>()) + " differs from " +
                        std::to_string(radicand()));
    }
    return FieldScalar(rational_field(j, "r"), rational_field(j, "s"));
  });
}

FieldScalar scalar_from_text(const std::string& text) {
  static const std::string kRoot = "\u221a";
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  for (std::size_t at; (at = s.find("sqrt")) != std::string::npos;) s.replace(at, 4, kRoot);
  const auto root = s.find(kRoot);
  try {
    if (root == std::string::npos) return FieldScalar(rational_from_string(s));
    const std::string d = s.substr(root + kRoot.size());
    if (d != std::to_string(radicand())) throw FormatError("'" + text + "' is not in Q(sqrt " + std::to_string(radicand()) + ")");
    const std::string head = s.substr(0, root);
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < head.size(); ++i) {
      if (head[i] == '+' || head[i] == '-') split = i;
    }
    const std::string rat = split == std::string::npos ? "0" : head.substr(0, split);
    std::string coef = split == std::string::npos ? head : head.substr(split);
    if (!coef.empty() && coef[0] == '+') coef.erase(0, 1);
    if (coef.empty()) coef = "1";
    if (coef == "-") coef = "-1";
    return FieldScalar(rational_from_string(rat), rational_from_string(coef));
  } catch (const std::invalid_argument& e) {
    throw FormatError("malformed scalar '" + text + "': " + e.what());
  }
}

json point_to_json(const Point& p) { return json::array({scalar_to_json(p.x), scalar_to_json(p.y)}); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("point must be a two-element array");
  return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

json points_to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back(point_to_json(p));
  return out;
}

std::vector<Point> points_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("positions must be an array");
  std::vector<Point> out;
  for (const json& p : j) out.push_back(point_from_json(p));
  return out;
}

Scenario scenario_from_json(const json& j) {
  return rethrow_as_format([&] {
    if (!j.is_object()) throw FormatError("scenario must be a JSON object");
    Scenario s;
    s.d = j.value("d", 3L);
    set_radicand(s.d);
    if (j.contains("positions")) {
      s.config.positions = points_from_json(j.at("positions"));
    } else if (j.contains("config")) {
      s.config = named_config(j.at("config").get<std::string>());
    } else {
      throw FormatError("scenario needs \"positions\" or \"config\"");
    }
    if (s.config.positions.empty()) throw FormatError("scenario has no robots");
    s.policy.model = model_from_string(j.value("model", std::string("adversarial")));
    s.policy.k = j.value("k", static_cast<int>(s.config.size()) - 2);
    s.policy.tiebreak = tiebreak_from_string(j.value("tiebreak", std::string("lowest-id")));
    s.algorithm = j.value("algorithm", std::string("alg1"));
    s.max_rounds = j.value("max_rounds", 10);
    s.adversary = j.value("adversary", std::string("lowest-ids"));
    if (s.max_rounds < 0) throw FormatError("max_rounds must be non-negative");
    return s;
  });
}

json scenario_to_json(const Scenario& s) {
  return {{"d", s.d},
          {"positions", points_to_json(s.config.positions)},
          {"model", to_string(s.policy.model)},
          {"k", s.policy.k},
          {"algorithm", s.algorithm},
          {"max_rounds", s.max_rounds},
          {"adversary", s.adversary},
          {"tiebreak", to_string(s.policy.tiebreak)}};
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open scenario '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("scenario '" + path + "': " + e.what());
  }
  return scenario_from_json(j);
}

json verdict_to_json(const TraceVerdict& v) {
  switch (v.kind) {
    case TraceVerdict::Kind::Gathered:
      return {{"kind", "Gathered"}, {"rounds", v.value}};
    case TraceVerdict::Kind::RoundLimitReached:
      return {{"kind", "RoundLimitReached"}};
    case TraceVerdict::Kind::CycleDetected:
      return {{"kind", "CycleDetected"}, {"period", v.value}};
  }
  throw std::logic_error("unknown verdict");
}

TraceVerdict verdict_from_json(const json& j) {
  return rethrow_as_format([&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Gathered") return TraceVerdict{TraceVerdict::Kind::Gathered, j.at("rounds").get<int>()};
    if (kind == "RoundLimitReached") return TraceVerdict{TraceVerdict::Kind::RoundLimitReached, 0};
    if (kind == "CycleDetected") return TraceVerdict{TraceVerdict::Kind::CycleDetected, j.at("period").get<int>()};
    throw FormatError("unknown verdict kind '" + kind + "'");
  });
}

void write_trace(std::ostream& out, const Trace& trace, const std::optional<json>& header) {
  if (header) out << json{{"header", *header}}.dump() << '\n';
  for (const RoundRecord& rec : trace.rounds) {
    out << json{{"round", rec.before.round},
                {"positions", points_to_json(rec.before.positions)},
                {"observed", rec.observed},
                {"destinations", points_to_json(rec.destinations)}}
               .dump()
        << '\n';
  }
  json last{{"verdict", verdict_to_json(trace.verdict)}, {"positions", points_to_json(trace.final_config.positions)},
            {"round", trace.final_config.round}};
  out << last.dump() << '\n';
}

void write_trace_file(const std::string& path, const Trace& trace, const std::optional<json>& header) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write trace '" + path + "'");
  write_trace(out, trace, header);
}

TraceFile read_trace(std::istream& in) {
  return rethrow_as_format([&] {
    TraceFile file;
    std::string line;
    bool finished = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      if (finished) throw FormatError("content after the verdict line");
      const json j = json::parse(line);
      if (j.contains("header")) {
        if (lineno != 1) throw FormatError("header must be the first line");
        file.header = j.at("header");
        if (file.header->contains("d")) set_radicand(file.header->at("d").get<long>());
      } else if (j.contains("verdict")) {
        file.trace.verdict = verdict_from_json(j.at("verdict"));
        if (j.contains("positions")) {
          file.trace.final_config.positions = points_from_json(j.at("positions"));
          file.trace.final_config.round = j.value("round", static_cast<int>(file.trace.rounds.size()));
        } else if (!file.trace.rounds.empty()) {
          file.trace.final_config = {file.trace.rounds.back().destinations, file.trace.rounds.back().before.round + 1};
        }
        finished = true;
      } else {
        RoundRecord rec;
        rec.before.round = j.at("round").get<int>();
        rec.before.positions = points_from_json(j.at("positions"));
        rec.observed = j.at("observed").get<std::vector<IdSet>>();
        rec.destinations = points_from_json(j.at("destinations"));
        if (rec.observed.size() != rec.before.size() || rec.destinations.size() != rec.before.size()) {
          throw FormatError("round " + std::to_string(rec.before.round) + " has mismatched robot counts");
        }
        file.trace.rounds.push_back(std::move(rec));
      }
    }
    if (!finished) throw FormatError("trace has no verdict line");
    return file;
  });
}

TraceFile read_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open trace '" + path + "'");
  return read_trace(in);
}

json run_header(const std::string& algorithm, const DefectPolicy& policy) {
  return {{"algorithm", algorithm},
          {"model", to_string(policy.model)},
          {"k", policy.k},
          {"tiebreak", to_string(policy.tiebreak)},
          {"d", radicand()}};
}

json report_to_json(const Report& r) {
  json j{{"claim", r.claim},     {"instance", r.instance}, {"explored", r.explored},
         {"verdict", r.verdict}, {"bound", r.bound},       {"trace_path", r.trace_path}};
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

}  // namespace gathersim
