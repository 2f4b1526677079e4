#include <benchmark/benchmark.h>

#include "gathersim/algorithms.hpp"
#include "gathersim/configs.hpp"
#include "gathersim/kernels.hpp"
#include "gathersim/verification.hpp"

using namespace gathersim;

namespace {

Configuration generic(std::size_t n) {
  std::mt19937_64 rng(7 + n);
  return random_generic_config(n, rng);
}

Execution mode(const benchmark::State& state) { return state.range(1) == 0 ? Execution::Serial : Execution::Parallel; }

void BM_RobotMoves(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Configuration c = generic(n);
  const DefectPolicy policy{Model::Adversarial, static_cast<int>(n) - 2};
  for (auto _ : state) benchmark::DoNotOptimize(robot_moves(c, alg1(), policy, true, mode(state)));
  state.SetLabel(mode(state) == Execution::Serial ? "serial" : "parallel");
}

void BM_ExpandSuccessors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Configuration c = generic(n);
  const DefectPolicy policy{Model::Adversarial, static_cast<int>(n) - 2};
  const auto moves = robot_moves(c, alg1(), policy, true, Execution::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(expand_successors(c, moves, mode(state)));
  state.counters["tuples"] = static_cast<double>(successor_tuples(moves));
  state.SetLabel(mode(state) == Execution::Serial ? "serial" : "parallel");
}

void BM_ExhaustiveCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Configuration c = generic(n);
  const DefectPolicy policy{Model::Adversarial, static_cast<int>(n) - 2};
  CheckOptions options;
  options.exec = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_check(c, "alg1", policy, 3, options));
  state.SetLabel(mode(state) == Execution::Serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_RobotMoves)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExpandSuccessors)->ArgsProduct({{5, 6, 7}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExhaustiveCheck)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
