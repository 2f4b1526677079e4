// gathersim: run, verify, scenario and plot front end.
//
// Exit codes: 0 success or claim holds, 1 counterexample / claim fails,
// 2 usage or input error, 3 state-space budget exhausted.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gathersim/algorithms.hpp"
#include "gathersim/configs.hpp"
#include "gathersim/io.hpp"
#include "gathersim/plot.hpp"
#include "gathersim/scenarios.hpp"
#include "gathersim/verification.hpp"

namespace fs = std::filesystem;
using namespace gathersim;

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string out_dir() {
  const char* env = std::getenv("GATHERSIM_OUT_DIR");
  return env != nullptr && *env != '\0' ? env : ".";
}

std::string default_path(const std::string& given, const std::string& file) {
  if (!given.empty()) return given;
  fs::create_directories(out_dir());
  return (fs::path(out_dir()) / file).string();
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

// A scenario file when the path exists, otherwise a named configuration.
Configuration resolve_config(const std::string& name_or_path) {
  if (fs::is_regular_file(name_or_path)) return load_scenario(name_or_path).config;
  return named_config(name_or_path);
}

struct RunFlags {
  std::string scenario;
  std::string config;
  std::string algorithm;
  std::string model;
  int k = -1;
  std::string tiebreak;
  std::string adversary;
  int max_rounds = -1;
  std::string trace;
};

int cmd_run(const RunFlags& f) {
  Scenario s;
  if (!f.scenario.empty()) {
    s = load_scenario(f.scenario);
  } else if (!f.config.empty()) {
    s.config = resolve_config(f.config);
    s.policy.k = static_cast<int>(s.config.size()) - 2;
  } else {
    throw UsageError("run needs --scenario or --config");
  }
  if (!f.algorithm.empty()) s.algorithm = f.algorithm;
  if (!f.model.empty()) s.policy.model = model_from_string(f.model);
  if (f.k >= 0) s.policy.k = f.k;
  if (!f.tiebreak.empty()) s.policy.tiebreak = tiebreak_from_string(f.tiebreak);
  if (!f.adversary.empty()) s.adversary = f.adversary;
  if (f.max_rounds >= 0) s.max_rounds = f.max_rounds;

  const int n = static_cast<int>(s.config.size());
  if (s.policy.k < 1 || s.policy.k > n - 1) {
    throw UsageError("k must satisfy 1 <= k <= N-1 (N=" + std::to_string(n) + ", k=" + std::to_string(s.policy.k) + ")");
  }
  const DestinationFunction alg = algorithm_by_name(s.algorithm);
  const Trace trace = run(s.config, alg, s.policy, strategy_by_name(s.adversary), s.max_rounds);
  const std::string path = default_path(f.trace, "run.trace.jsonl");
  json header = run_header(s.algorithm, s.policy);
  header["adversary"] = s.adversary;
  write_trace_file(path, trace, header);
  std::cout << "verdict: " << trace.verdict.to_string() << "\nrounds: " << trace.rounds.size() << "\ntrace: " << path
            << '\n';
  return kOk;
}

struct VerifyFlags {
  std::string claim;
  std::string config;
  std::size_t n = 5;
  int bound = -1;
  std::uint64_t budget = CheckOptions{}.budget;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::string algorithm = "alg1";
  std::string model = "adversarial";
  int k = -1;
  std::string report;
  std::string trace;
};

struct ClaimResult {
  bool holds = true;
  std::uint64_t explored = 0;
  std::string instance;
  std::string verdict;
  int bound = 0;
  std::optional<Trace> counterexample;
  json header;
  json details = json::array();
};

std::vector<NamedInstance> instances_or(const VerifyFlags& f, std::vector<NamedInstance> fallback) {
  if (f.config.empty()) return fallback;
  return {{f.config, resolve_config(f.config)}};
}

void exhaustive_claim(ClaimResult& out, const std::vector<NamedInstance>& instances, const std::string& alg,
                      const DefectPolicy& fixed, bool k_from_n, int bound, const CheckOptions& options) {
  out.verdict = "AllGatherWithin(0)";
  int worst = 0;
  for (const NamedInstance& inst : instances) {
    DefectPolicy policy = fixed;
    if (k_from_n) policy.k = static_cast<int>(inst.config.size()) - 2;
    const Verdict v = exhaustive_check(inst.config, alg, policy, bound, options);
    out.explored += v.explored;
    out.details.push_back({{"instance", inst.name}, {"verdict", v.to_string()}, {"explored", v.explored}});
    if (!v.holds() && out.holds) {
      out.holds = false;
      out.counterexample = v.trace;
      out.verdict = v.to_string();
      out.instance = inst.name;
      out.header = run_header(alg, policy);
    }
    worst = std::max(worst, v.rounds);
  }
  if (out.holds) out.verdict = "AllGatherWithin(" + std::to_string(worst) + ")";
}

ClaimResult verify_claim(const VerifyFlags& f) {
  ClaimResult out;
  CheckOptions options;
  options.budget = f.budget;
  const std::string& c = f.claim;
  out.instance = f.config.empty() ? "suite" : f.config;

  if (c == "thm-3.6") {
    out.bound = f.bound < 0 ? 3 : f.bound;
    const auto suite = instances_or(f, theorem_3_6_suite(f.n));
    exhaustive_claim(out, suite, "alg1", {Model::Adversarial, 0}, true, out.bound, options);
  } else if (c == "thm-4.9") {
    const DefectPolicy policy{Model::DistanceBased, 2, TieBreak::LowestId};
    const int bound = f.bound < 0 ? 4 : f.bound;
    out.bound = bound;
    std::vector<NamedInstance> named;
    for (const char* name : {"square", "three-longest", "four-longest", "parallelogram-unique-diagonal"}) {
      named.push_back({name, named_config(name)});
    }
    exhaustive_claim(out, instances_or(f, named), "alg2", policy, false, bound, options);
    if (f.config.empty() && f.samples > 0) {
      const SamplingReport s = sample_theorem_4_9(f.samples, f.seed, Execution::Parallel, bound);
      out.details.push_back({{"instance", "random-generic"},
                             {"samples", s.samples},
                             {"seed", f.seed},
                             {"failures", s.failures},
                             {"worst_rounds", s.worst_rounds}});
      out.explored += s.samples;
      if (s.failures > 0 && out.holds) {
        out.holds = false;
        out.verdict = "SampleFailure(" + std::to_string(*s.first_failure) + ")";
      }
    }
  } else if (c == "lemma-3.2" || c == "lemma-3.3" || c == "lemma-3.4") {
    const auto fallback = c == "lemma-3.2"   ? lemma_3_2_instances(f.n)
                          : c == "lemma-3.3" ? lemma_3_3_instances(f.n)
                                             : lemma_3_4_instances(f.n);
    out.bound = c == "lemma-3.4" ? 3 : 2;
    const auto check = c == "lemma-3.2" ? check_lemma_3_2 : c == "lemma-3.3" ? check_lemma_3_3 : check_lemma_3_4;
    for (const NamedInstance& inst : instances_or(f, fallback)) {
      const bool ok = check(inst.config, options);
      out.details.push_back({{"instance", inst.name}, {"holds", ok}});
      if (!ok && out.holds) {
        out.holds = false;
        out.instance = inst.name;
      }
    }
    out.verdict = out.holds ? "holds" : "fails";
  } else if (c == "lemma-4.2") {
    std::vector<NamedInstance> named;
    for (const char* name : {"square", "parallelogram-unique-diagonal", "three-longest", "four-longest"}) {
      named.push_back({name, named_config(name)});
    }
    for (const NamedInstance& inst : instances_or(f, named)) {
      const ViewLemmaReport r = check_view_lemmas_42(inst.config);
      out.explored += r.branches.size();
      out.details.push_back({{"instance", inst.name},
                             {"branches", r.branches.size()},
                             {"distinct_view_branches", std::count_if(r.branches.begin(), r.branches.end(),
                                                                      [](const ViewBranch& b) { return b.views_distinct; })},
                             {"holds", r.all_hold()}});
      out.holds = out.holds && r.all_hold();
    }
    out.verdict = out.holds ? "holds" : "fails";
  } else if (c == "lemma-4.6" || c == "lemma-4.7" || c == "lemma-4.8") {
    const std::string fallback = c == "lemma-4.6" ? "parallelogram-unique-diagonal"
                                 : c == "lemma-4.7" ? "three-longest"
                                                    : "four-longest";
    const std::string name = f.config.empty() ? fallback : f.config;
    const Configuration cfg = resolve_config(name);
    const std::size_t longest = longest_pairs(cfg.positions).size();
    const bool fits = c == "lemma-4.6" ? longest <= 2 : c == "lemma-4.7" ? longest == 3 : longest == 4;
    if (!fits) throw PreconditionViolation(name + " has " + std::to_string(longest) + " longest pairs");
    const LongestLineReport r = check_longest_line_lemmas(cfg);
    if (r.branches.empty()) throw PreconditionViolation(name + " has no branch with all views distinct");
    out.instance = name;
    for (const LongestLineBranch& b : r.branches) {
      out.details.push_back({{"observed", b.observed},
                             {"longest", b.longest_count},
                             {"allowed_rounds", b.allowed_rounds},
                             {"accompanied_in_time", b.accompanied_in_time},
                             {"intermediate_shape_ok", b.intermediate_shape_ok},
                             {"after_first", points_to_json(b.after_first.positions)}});
    }
    out.explored = r.branches.size();
    out.bound = c == "lemma-4.6" ? 1 : 2;
    out.holds = r.all_hold();
    out.verdict = out.holds ? "holds" : "fails";
  } else if (c == "search") {
    if (f.config.empty()) throw UsageError("claim 'search' needs --config");
    const Configuration cfg = resolve_config(f.config);
    const DefectPolicy policy{model_from_string(f.model), f.k < 0 ? static_cast<int>(cfg.size()) - 2 : f.k,
                              TieBreak::LowestId};
    out.bound = f.bound < 0 ? 6 : f.bound;
    const Verdict v = adversary_search(cfg, algorithm_by_name(f.algorithm), policy, out.bound, options);
    out.explored = v.explored;
    out.verdict = v.to_string();
    out.holds = v.holds();
    if (!v.holds()) {
      out.counterexample = v.trace;
      out.header = run_header(f.algorithm, policy);
    }
  } else {
    throw UsageError("unknown claim '" + c + "'");
  }
  return out;
}

int cmd_verify(const VerifyFlags& f) {
  const ClaimResult res = verify_claim(f);
  Report report;
  report.claim = f.claim;
  report.instance = res.instance;
  report.explored = res.explored;
  report.verdict = res.verdict;
  report.bound = res.bound;
  report.details = res.details;
  if (res.counterexample) {
    report.trace_path = default_path(f.trace, f.claim + ".trace.jsonl");
    write_trace_file(report.trace_path, *res.counterexample, res.header);
  }
  const json j = report_to_json(report);
  write_json(default_path(f.report, f.claim + ".report.json"), j);
  std::cout << j.dump(2) << '\n';
  return res.holds ? kOk : kFails;
}

struct ScenarioFlags {
  std::string name;
  std::size_t n = 5;
  int rounds = -1;
  std::string scale;
  int angle = 0;
  std::string trace;
  std::string report;
};

Trace tri31_trace(const Tri31Report& r, const Tri31Outcome& o) {
  Trace t;
  RoundRecord rec;
  rec.before = r.start;
  rec.observed = {{1}, {2}, {0}};
  rec.destinations = o.successor.positions;
  t.rounds.push_back(rec);
  t.final_config = o.successor;
  t.verdict = o.gathered ? TraceVerdict{TraceVerdict::Kind::Gathered, 1} : TraceVerdict{TraceVerdict::Kind::RoundLimitReached, 0};
  return t;
}

int cmd_scenario(const ScenarioFlags& f) {
  Report report;
  report.claim = "scenario-" + f.name;
  bool ok = false;
  if (f.name == "n4-cycle") {
    set_radicand(3);
    const int rounds = f.rounds < 0 ? 6 : f.rounds;
    const Trace trace = scenario_alg1_n4_cycle(rounds);
    report.instance = "n4-equilateral-center";
    report.trace_path = default_path(f.trace, "n4-cycle.trace.jsonl");
    write_trace_file(report.trace_path, trace, run_header("alg1", {Model::Adversarial, 2, TieBreak::LowestId}));
    report.verdict = trace.verdict.to_string();
    report.bound = rounds;
    report.explored = trace.rounds.size();
    ok = trace.verdict.kind == TraceVerdict::Kind::CycleDetected;
  } else if (f.name == "relaxed") {
    const int rounds = f.rounds < 0 ? 10 : f.rounds;
    const RelaxedReport r = scenario_relaxed(f.n, rounds);
    report.instance = "two-point:2," + std::to_string(f.n - 2);
    report.trace_path = default_path(f.trace, "relaxed.trace.jsonl");
    write_trace_file(report.trace_path, r.trace,
                     run_header("alg1", {Model::RelaxedAdversarial, static_cast<int>(f.n) - 2, TieBreak::LowestId}));
    report.verdict = r.trace.verdict.to_string();
    report.bound = rounds;
    report.explored = r.trace.rounds.size();
    json dists = json::array();
    for (const FieldScalar& d : r.sq_distances) dists.push_back(scalar_to_json(d));
    report.details = {{"sq_distances", dists},
                      {"two_points_every_round", r.two_points_every_round},
                      {"never_gathered", r.never_gathered},
                      {"period_two", r.period_two},
                      {"quarter_decay", r.quarter_decay}};
    ok = r.never_gathered && r.two_points_every_round && (f.n == 4 ? r.period_two : r.quarter_decay);
  } else if (f.name == "tri31") {
    set_radicand(3);
    if (f.angle % 30 != 0) throw UsageError("--angle must be a multiple of 30 degrees");
    std::vector<LocalFrameRule> rules;
    if (f.scale.empty()) {
      for (const char* s : {"0", "1/3√3", "1", "2"}) {
        for (int a = 0; a < 12; ++a) rules.push_back({scalar_from_text(s), a});
      }
    } else {
      rules.push_back({scalar_from_text(f.scale), f.angle / 30});
    }
    report.instance = "equilateral";
    report.details = json::array();
    ok = true;
    for (const LocalFrameRule& rule : rules) {
      const Tri31Report r = scenario_tri31(rule);
      ok = ok && r.witness() && r.symmetric() && r.views_identical;
      report.details.push_back({{"scale", rule.scale.to_string()},
                                {"angle_cw_degrees", rule.angle_steps * 30},
                                {"gathered_A", r.outcomes[0].gathered},
                                {"gathered_B", r.outcomes[1].gathered},
                                {"c3_symmetric", r.symmetric()},
                                {"witness", r.witness()}});
      if (rules.size() == 1) {
        report.trace_path = default_path(f.trace, "tri31.trace.jsonl");
        const Tri31Outcome& shown = r.outcomes[0].gathered ? r.outcomes[1] : r.outcomes[0];
        write_trace_file(report.trace_path, tri31_trace(r, shown),
                         json{{"chirality", shown.chirality == Chirality::A ? "A" : "B"}, {"d", 3}});
      }
    }
    report.explored = rules.size();
    report.verdict = ok ? "non-gathering witness for every rule" : "no witness for some rule";
  } else {
    throw UsageError("unknown scenario '" + f.name + "' (n4-cycle, tri31, relaxed)");
  }
  const json j = report_to_json(report);
  write_json(default_path(f.report, f.name + ".report.json"), j);
  std::cout << j.dump(2) << '\n';
  return ok ? kOk : kFails;
}

int cmd_plot(const std::string& trace_path, const std::string& out) {
  const TraceFile file = read_trace_file(trace_path);
  const std::string path = default_path(out, fs::path(trace_path).stem().string() + ".svg");
  std::ofstream svg(path, std::ios::binary);
  if (!svg) throw UsageError("cannot write '" + path + "'");
  svg << render_svg(file.trace);
  std::cout << "plot: " << path << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gathering simulator and verifier for robots with defected views"};
  app.require_subcommand(1);

  RunFlags rf;
  auto* run_cmd = app.add_subcommand("run", "Simulate one scenario and write its trace");
  run_cmd->add_option("--scenario", rf.scenario, "Scenario JSON file");
  run_cmd->add_option("--config", rf.config, "Named configuration or scenario file");
  run_cmd->add_option("--algorithm", rf.algorithm, "alg1 or alg2");
  run_cmd->add_option("--model", rf.model, "adversarial, distance or relaxed");
  run_cmd->add_option("--k", rf.k, "Observed robots per Look");
  run_cmd->add_option("--tiebreak", rf.tiebreak, "lowest-id or highest-id");
  run_cmd->add_option("--adversary", rf.adversary, "lowest-ids, highest-ids or cycling");
  run_cmd->add_option("--max-rounds", rf.max_rounds, "Round limit");
  run_cmd->add_option("--trace", rf.trace, "Trace output (JSONL)");

  VerifyFlags vf;
  auto* verify_cmd = app.add_subcommand("verify", "Check a named claim exhaustively or by sampling");
  verify_cmd->add_option("--claim", vf.claim,
                         "thm-3.6, thm-4.9, lemma-3.2, lemma-3.3, lemma-3.4, lemma-4.2, lemma-4.6, lemma-4.7, "
                         "lemma-4.8, search")
      ->required();
  verify_cmd->add_option("--config", vf.config, "Named configuration or scenario file");
  verify_cmd->add_option("--n", vf.n, "Robot count for generated suites");
  verify_cmd->add_option("--bound", vf.bound, "Round bound (search depth for 'search')");
  verify_cmd->add_option("--budget", vf.budget, "Maximum successor expansions");
  verify_cmd->add_option("--samples", vf.samples, "Random samples for thm-4.9");
  verify_cmd->add_option("--seed", vf.seed, "Sampling seed");
  verify_cmd->add_option("--algorithm", vf.algorithm, "Algorithm for 'search'");
  verify_cmd->add_option("--model", vf.model, "Model for 'search'");
  verify_cmd->add_option("--k", vf.k, "k for 'search' (default N-2)");
  verify_cmd->add_option("--report", vf.report, "Report output (JSON)");
  verify_cmd->add_option("--trace", vf.trace, "Counterexample trace output (JSONL)");

  ScenarioFlags sf;
  auto* scenario_cmd = app.add_subcommand("scenario", "Replay an impossibility construction");
  scenario_cmd->add_option("name", sf.name, "n4-cycle, tri31 or relaxed")->required();
  scenario_cmd->add_option("--n", sf.n, "Robot count (relaxed)");
  scenario_cmd->add_option("--max-rounds", sf.rounds, "Rounds to replay");
  scenario_cmd->add_option("--scale", sf.scale, "tri31 rule scale, exact (e.g. 1, 1/3sqrt3); omit for the grid");
  scenario_cmd->add_option("--angle", sf.angle, "tri31 rule clockwise angle in degrees, multiple of 30");
  scenario_cmd->add_option("--trace", sf.trace, "Trace output (JSONL)");
  scenario_cmd->add_option("--report", sf.report, "Report output (JSON)");

  std::string plot_trace;
  std::string plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "Render a trace as SVG");
  plot_cmd->add_option("trace", plot_trace, "Trace file (JSONL)")->required();
  plot_cmd->add_option("--out", plot_out, "SVG output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(rf);
    if (*verify_cmd) return cmd_verify(vf);
    if (*scenario_cmd) return cmd_scenario(sf);
    if (*plot_cmd) return cmd_plot(plot_trace, plot_out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
