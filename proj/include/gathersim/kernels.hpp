#pragma once

// Data-parallel kernels behind the exhaustive search. Every kernel has a
// serial reference path; the OpenMP path must produce identical output in
// identical order.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <utility>
#include <vector>

#include "gathersim/engine.hpp"

namespace gathersim {

enum class Execution { Serial, Parallel };

/// Distinct destinations one robot can be driven to in the current round.
struct RobotMoves {
  std::vector<Point> destinations;
  /// (index into legal_choices, index into destination options) first
  /// realizing each destination.
  std::vector<std::pair<std::size_t, std::size_t>> witness;
  /// Number of (observed set, option) pairs, duplicates included.
  std::uint64_t legal = 0;
};

/// When `all_options` is false only option 0 of each observation is used.
std::vector<RobotMoves> robot_moves(const Configuration& c, const DestinationFunction& alg,
                                    const DefectPolicy& policy, bool all_options, Execution exec);

struct Successor {
  /// pick[r] indexes moves[r].destinations.
  std::vector<std::size_t> pick;
  Configuration config;
};

/// Successor configurations with distinct position multisets, in order of
/// first occurrence over the mixed-radix product (robot 0 most significant).
std::vector<Successor> expand_successors(const Configuration& c, std::span<const RobotMoves> moves,
                                         Execution exec);

/// Product of destination counts; throws std::overflow_error past 64 bits.
std::uint64_t successor_tuples(std::span<const RobotMoves> moves);

/// Runs body(i) for i in [0, n). Bodies must write only to slot i of their
/// outputs.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  // exceptions cannot cross the parallel region; keep the lowest-index one
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

int worker_threads();

}  // namespace gathersim
