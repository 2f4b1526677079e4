#include "gathersim/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace gathersim {

std::string TraceVerdict::to_string() const {
  switch (kind) {
    case Kind::Gathered:
      return "Gathered(" + std::to_string(value) + ")";
    case Kind::RoundLimitReached:
      return "RoundLimitReached";
    case Kind::CycleDetected:
      return "CycleDetected(" + std::to_string(value) + ")";
  }
  return "?";
}

namespace {

RoundChoice zero_options(std::vector<IdSet> observed) {
  RoundChoice choice;
  choice.option.assign(observed.size(), 0);
  choice.observed = std::move(observed);
  return choice;
}

constexpr std::uint64_t kCyclingSearchCap = 1'000'000;

}  // namespace

Strategy default_strategy() {
  return [](const Configuration& c, const DestinationFunction&, const DefectPolicy& policy) {
    std::vector<IdSet> observed;
    for (RobotId r = 0; r < c.size(); ++r) observed.push_back(default_choice(c, r, policy));
    return zero_options(std::move(observed));
  };
}

Strategy highest_ids_strategy() {
  return [](const Configuration& c, const DestinationFunction&, const DefectPolicy& policy) {
    std::vector<IdSet> observed;
    for (RobotId r = 0; r < c.size(); ++r) {
      if (policy.model == Model::DistanceBased) {
        DefectPolicy flipped = policy;
        flipped.tiebreak = TieBreak::HighestId;
        observed.push_back(default_choice(c, r, flipped));
      } else {
        IdSet eligible = eligible_robots(c, r, policy);
        const std::size_t m = observed_count(c, r, policy);
        observed.emplace_back(eligible.end() - static_cast<std::ptrdiff_t>(m), eligible.end());
      }
    }
    return zero_options(std::move(observed));
  };
}

Strategy cycling_strategy() {
  return [](const Configuration& c, const DestinationFunction& alg, const DefectPolicy& policy) {
    const ChoiceSpace space(c, policy);
    std::vector<std::vector<Point>> dest(c.size());
    for (RobotId r = 0; r < c.size(); ++r) {
      for (const IdSet& set : space.options(r)) dest[r].push_back(alg(observe(c, r, policy, set)));
    }
    const SimilaritySignature target = similarity_signature(c);
    const std::uint64_t total = std::min(space.size(), kCyclingSearchCap);
    for (std::uint64_t index = 0; index < total; ++index) {
      Configuration next{{}, c.round + 1};
      std::uint64_t rest = index;
      std::vector<std::size_t> pick(c.size());
      for (std::size_t r = c.size(); r-- > 0;) {
        pick[r] = static_cast<std::size_t>(rest % dest[r].size());
        rest /= dest[r].size();
      }
      for (RobotId r = 0; r < c.size(); ++r) next.positions.push_back(dest[r][pick[r]]);
      if (is_gathered(next)) continue;
      if (similarity_signature(next) == target && are_similar(next, c)) {
        return zero_options(space.at(index));
      }
    }
    return default_strategy()(c, alg, policy);
  };
}

Strategy scripted_strategy(std::vector<RoundChoice> script) {
  return [script = std::move(script)](const Configuration& c, const DestinationFunction&,
                                      const DefectPolicy&) {
    if (c.round < 0 || static_cast<std::size_t>(c.round) >= script.size()) {
      throw std::out_of_range("script has no choice for round " + std::to_string(c.round));
    }
    return script[static_cast<std::size_t>(c.round)];
  };
}

Strategy strategy_by_name(const std::string& name) {
  if (name == "lowest-ids") return default_strategy();
  if (name == "highest-ids") return highest_ids_strategy();
  if (name == "cycling") return cycling_strategy();
  throw std::invalid_argument("unknown adversary strategy '" + name + "'");
}

std::pair<Configuration, RoundRecord> step(const Configuration& c, const DestinationFunction& alg,
                                           const DefectPolicy& policy, const RoundChoice& choice) {
  if (choice.observed.size() != c.size() || choice.option.size() != c.size()) {
    throw IllegalChoice("round choice does not cover every robot");
  }
  RoundRecord rec;
  rec.before = c;
  rec.observed = choice.observed;
  for (RobotId r = 0; r < c.size(); ++r) {
    Observation obs = observe(c, r, policy, choice.observed[r]);
    const std::vector<Point> options = alg.options(obs);
    if (choice.option[r] >= options.size()) {
      throw std::out_of_range("robot " + std::to_string(r) + ": destination option " +
                              std::to_string(choice.option[r]) + " does not exist");
    }
    rec.destinations.push_back(options[choice.option[r]]);
    rec.observations.push_back(std::move(obs));
  }
  Configuration next{rec.destinations, c.round + 1};
  return {std::move(next), std::move(rec)};
}

Trace run(const Configuration& c, const DestinationFunction& alg, const DefectPolicy& policy,
          const Strategy& strategy, int max_rounds, RunOptions options) {
  if (max_rounds < 0) throw std::invalid_argument("max_rounds must be non-negative");
  Trace trace;
  Configuration cur = c;
  std::vector<std::pair<SimilaritySignature, Configuration>> history;
  if (options.cycles != CycleMode::Off) history.emplace_back(similarity_signature(cur), cur);
  bool cycle_seen = false;

  for (int t = 0;; ++t) {
    if (is_gathered(cur)) {
      trace.verdict = {TraceVerdict::Kind::Gathered, t};
      break;
    }
    if (t == max_rounds) {
      if (!cycle_seen) trace.verdict = {TraceVerdict::Kind::RoundLimitReached, 0};
      break;
    }
    auto [next, rec] = step(cur, alg, policy, strategy(cur, alg, policy));
    trace.rounds.push_back(std::move(rec));
    cur = std::move(next);

    if (options.cycles == CycleMode::Off || cycle_seen || is_gathered(cur)) continue;
    SimilaritySignature sig = similarity_signature(cur);
    for (std::size_t s = 0; s < history.size(); ++s) {
      if (history[s].first == sig && are_similar(history[s].second, cur)) {
        trace.verdict = {TraceVerdict::Kind::CycleDetected, t + 1 - static_cast<int>(s)};
        cycle_seen = true;
        break;
      }
    }
    if (cycle_seen && options.cycles == CycleMode::Stop) break;
    history.emplace_back(std::move(sig), cur);
  }
  trace.final_config = std::move(cur);
  return trace;
}

std::vector<RoundChoice> script_from_trace(const Trace& trace, const DestinationFunction& alg,
                                           const DefectPolicy& policy) {
  std::vector<RoundChoice> script;
  for (const RoundRecord& rec : trace.rounds) {
    RoundChoice choice;
    choice.observed = rec.observed;
    for (RobotId r = 0; r < rec.before.size(); ++r) {
      const auto opts = alg.options(observe(rec.before, r, policy, rec.observed[r]));
      auto it = std::find(opts.begin(), opts.end(), rec.destinations[r]);
      if (it == opts.end()) {
        throw std::invalid_argument("trace destination of robot " + std::to_string(r) +
                                    " is not admissible");
      }
      choice.option.push_back(static_cast<std::size_t>(it - opts.begin()));
    }
    script.push_back(std::move(choice));
  }
  return script;
}

}  // namespace gathersim
