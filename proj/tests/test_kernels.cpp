#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gathersim/algorithms.hpp"
#include "gathersim/configs.hpp"
#include "gathersim/kernels.hpp"
#include "support.hpp"

using namespace gathersim;
using support::P;

namespace {

struct Threads {
  Threads() {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
  }
};
const Threads force_threads;

std::vector<Configuration> sample_configs() {
  std::mt19937_64 rng(61);
  std::vector<Configuration> out;
  for (int i = 0; i < 10; ++i) out.push_back(random_generic_config(5, rng));
  for (int i = 0; i < 10; ++i) out.push_back(random_grouped_config({2}, 3, rng));
  for (int i = 0; i < 5; ++i) out.push_back(random_grouped_config({3}, 3, rng));
  for (int i = 0; i < 5; ++i) out.push_back(random_cocircular_config(5, rng));
  return out;
}

// Brute force: every combination of observed sets and options, stepped by the engine.
std::set<std::vector<Point>> brute_force_successors(const Configuration& c, const DestinationFunction& alg,
                                                    const DefectPolicy& policy) {
  std::set<std::vector<Point>> out;
  const ChoiceSpace space(c, policy);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const auto observed = space.at(i);
    std::vector<std::vector<Point>> opts;
    for (RobotId r = 0; r < c.size(); ++r) opts.push_back(alg.options(observe(c, r, policy, observed[r])));
    std::vector<std::size_t> pick(c.size(), 0);
    while (true) {
      std::vector<Point> dest;
      for (RobotId r = 0; r < c.size(); ++r) dest.push_back(opts[r][pick[r]]);
      std::sort(dest.begin(), dest.end());
      out.insert(dest);
      std::size_t r = c.size();
      while (r > 0 && ++pick[r - 1] == opts[r - 1].size()) pick[--r] = 0;
      if (r == 0) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("robot_moves: serial and parallel agree") {
  const DefectPolicy policy{Model::Adversarial, 3};
  for (const Configuration& c : sample_configs()) {
    for (bool all : {true, false}) {
      const auto s = robot_moves(c, alg1(), policy, all, Execution::Serial);
      const auto p = robot_moves(c, alg1(), policy, all, Execution::Parallel);
      REQUIRE(s.size() == p.size());
      for (std::size_t r = 0; r < s.size(); ++r) {
        CHECK(s[r].destinations == p[r].destinations);
        CHECK(s[r].witness == p[r].witness);
        CHECK(s[r].legal == p[r].legal);
      }
    }
  }
}

TEST_CASE("robot_moves witnesses realize their destinations") {
  const DefectPolicy policy{Model::Adversarial, 3};
  for (const Configuration& c : sample_configs()) {
    const auto moves = robot_moves(c, alg1(), policy, true, Execution::Serial);
    for (RobotId r = 0; r < c.size(); ++r) {
      const auto choices = legal_choices(c, r, policy);
      std::set<Point> expected;
      std::uint64_t legal = 0;
      for (const IdSet& s : choices) {
        const auto opts = alg1().options(observe(c, r, policy, s));
        legal += opts.size();
        expected.insert(opts.begin(), opts.end());
      }
      CHECK(moves[r].legal == legal);
      CHECK(std::set<Point>(moves[r].destinations.begin(), moves[r].destinations.end()) == expected);
      CHECK(moves[r].destinations.size() == expected.size());
      for (std::size_t j = 0; j < moves[r].destinations.size(); ++j) {
        const auto [ci, oi] = moves[r].witness[j];
        CHECK(alg1().options(observe(c, r, policy, choices[ci]))[oi] == moves[r].destinations[j]);
      }
    }
  }
}

TEST_CASE("expand_successors matches brute force and is identical across execution modes") {
  const DefectPolicy policy{Model::Adversarial, 3};
  for (const Configuration& c : sample_configs()) {
    const auto moves = robot_moves(c, alg1(), policy, true, Execution::Serial);
    const auto s = expand_successors(c, moves, Execution::Serial);
    const auto p = expand_successors(c, moves, Execution::Parallel);
    REQUIRE(s.size() == p.size());
    std::set<std::vector<Point>> got;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].pick == p[i].pick);
      CHECK(s[i].config.positions == p[i].config.positions);
      CHECK(s[i].config.round == c.round + 1);
      for (RobotId r = 0; r < c.size(); ++r) CHECK(s[i].config.positions[r] == moves[r].destinations[s[i].pick[r]]);
      auto key = s[i].config.positions;
      std::sort(key.begin(), key.end());
      CHECK(got.insert(key).second);
    }
    CHECK(got == brute_force_successors(c, alg1(), policy));
  }
}

TEST_CASE("expand_successors on distance-based four-robot inputs") {
  const DefectPolicy policy{Model::DistanceBased, 2};
  for (const std::string name : {"square", "three-longest", "four-longest", "parallelogram-unique-diagonal"}) {
    const Configuration c = named_config(name);
    const auto moves = robot_moves(c, alg2(), policy, true, Execution::Parallel);
    const auto succ = expand_successors(c, moves, Execution::Parallel);
    std::set<std::vector<Point>> got;
    for (const auto& s : succ) {
      auto key = s.config.positions;
      std::sort(key.begin(), key.end());
      got.insert(key);
    }
    CHECK(got == brute_force_successors(c, alg2(), policy));
  }
}

TEST_CASE("successor tuple count") {
  const Configuration c = named_config("square");
  const auto moves = robot_moves(c, alg1(), {Model::Adversarial, 2}, true, Execution::Serial);
  std::uint64_t product = 1;
  for (const auto& m : moves) product *= m.destinations.size();
  CHECK(successor_tuples(moves) == product);
  std::vector<RobotMoves> huge(70);
  for (auto& m : huge) m.destinations = {P(0, 0), P(1, 0)};
  CHECK_THROWS_AS(successor_tuples(huge), std::overflow_error);
}

TEST_CASE("for_each_index propagates the lowest-index exception") {
  std::vector<int> out(100, 0);
  for_each_index(out.size(), Execution::Parallel, [&](std::size_t i) { out[i] = static_cast<int>(i) * 2; });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i) * 2);
  for (const Execution exec : {Execution::Serial, Execution::Parallel}) {
    try {
      for_each_index(100, exec, [](std::size_t i) {
        if (i == 37 || i == 80) throw std::runtime_error(std::to_string(i));
      });
      FAIL("no exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "37");
    }
  }
  CHECK(worker_threads() >= 1);
}
