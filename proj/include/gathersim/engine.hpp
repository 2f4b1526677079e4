#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gathersim/model.hpp"

namespace gathersim {

/// Compute step of one robot: Observation -> destination, in the
/// observation's frame.
///
/// `options` lists every destination the algorithm admits for the
/// observation; more than one exists only where the algorithm leaves an
/// arbitrary choice open. The first option is the algorithm's own pick.
class DestinationFunction {
 public:
  using Options = std::function<std::vector<Point>(const Observation&)>;

  DestinationFunction(std::string name, Options options)
      : name_(std::move(name)), options_(std::move(options)) {}

  Point operator()(const Observation& obs) const { return options_(obs).front(); }
  std::vector<Point> options(const Observation& obs) const { return options_(obs); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Options options_;
};

/// Everything the adversary decides in one round: each robot's observed set
/// and which admissible destination it takes (index into options()).
struct RoundChoice {
  std::vector<IdSet> observed;
  std::vector<std::size_t> option;
};

struct RoundRecord {
  Configuration before;
  std::vector<IdSet> observed;
  std::vector<Observation> observations;
  std::vector<Point> destinations;
};

struct TraceVerdict {
  enum class Kind { Gathered, RoundLimitReached, CycleDetected };
  Kind kind = Kind::RoundLimitReached;
  /// Round at which gathering held, or the cycle period.
  int value = 0;

  friend bool operator==(const TraceVerdict&, const TraceVerdict&) = default;
  std::string to_string() const;
};

struct Trace {
  std::vector<RoundRecord> rounds;
  Configuration final_config;
  TraceVerdict verdict;
};

using Strategy =
    std::function<RoundChoice(const Configuration&, const DestinationFunction&, const DefectPolicy&)>;

/// Each robot observes default_choice() and takes option 0.
Strategy default_strategy();
/// Adversarial/relaxed: highest eligible ids; distance-based: highest-id tie-break.
Strategy highest_ids_strategy();
/// Per round, the first assignment (in enumeration order) whose successor is
/// similar to the current configuration; falls back to the default pick.
Strategy cycling_strategy();
/// Replays choices by round number (configuration.round indexes the list).
Strategy scripted_strategy(std::vector<RoundChoice> script);

/// "lowest-ids", "highest-ids", "cycling". Throws std::invalid_argument.
Strategy strategy_by_name(const std::string& name);

/// One FSYNC round with rigid movement: every robot lands exactly on its
/// destination. Throws IllegalChoice for an illegal choice and
/// std::out_of_range for a bad option index.
std::pair<Configuration, RoundRecord> step(const Configuration& c, const DestinationFunction& alg,
                                           const DefectPolicy& policy, const RoundChoice& choice);

enum class CycleMode {
  Off,
  /// Stop at the first configuration similar to an earlier one.
  Stop,
  /// Keep going to the round limit, but report the first cycle found.
  Record,
};

struct RunOptions {
  CycleMode cycles = CycleMode::Stop;
};

Trace run(const Configuration& c, const DestinationFunction& alg, const DefectPolicy& policy,
          const Strategy& strategy, int max_rounds, RunOptions options = {});

/// Roll the choices recorded in a trace back into a script for run().
std::vector<RoundChoice> script_from_trace(const Trace& trace, const DestinationFunction& alg,
                                           const DefectPolicy& policy);

}  // namespace gathersim
