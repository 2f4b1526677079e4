#include "gathersim/kernels.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gathersim {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const {
    std::size_t h = key.size();
    for (std::uint32_t v : key) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

using KeySet = std::unordered_set<std::vector<std::uint32_t>, KeyHash>;

struct FirstSeen {
  std::uint64_t index;
  std::vector<std::uint32_t> key;
};

std::vector<std::uint32_t> tuple_key(std::uint64_t index, const std::vector<std::vector<std::uint32_t>>& gid,
                                     std::vector<std::size_t>* pick) {
  const std::size_t n = gid.size();
  std::vector<std::uint32_t> key(n);
  for (std::size_t r = n; r-- > 0;) {
    const std::uint64_t radix = gid[r].size();
    const auto j = static_cast<std::size_t>(index % radix);
    index /= radix;
    key[r] = gid[r][j];
    if (pick != nullptr) (*pick)[r] = j;
  }
  std::sort(key.begin(), key.end());
  return key;
}

// First occurrences within [begin, end), in index order.
std::vector<FirstSeen> scan_range(std::uint64_t begin, std::uint64_t end,
                                  const std::vector<std::vector<std::uint32_t>>& gid) {
  std::vector<FirstSeen> out;
  KeySet seen;
  for (std::uint64_t i = begin; i < end; ++i) {
    auto key = tuple_key(i, gid, nullptr);
    if (seen.insert(key).second) out.push_back({i, std::move(key)});
  }
  return out;
}

}  // namespace

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<RobotMoves> robot_moves(const Configuration& c, const DestinationFunction& alg,
                                    const DefectPolicy& policy, bool all_options, Execution exec) {
  const std::size_t n = c.size();
  std::vector<std::vector<IdSet>> choices(n);
  std::vector<std::pair<RobotId, std::size_t>> jobs;
  for (RobotId r = 0; r < n; ++r) {
    choices[r] = legal_choices(c, r, policy);
    for (std::size_t j = 0; j < choices[r].size(); ++j) jobs.emplace_back(r, j);
  }

  std::vector<std::vector<Point>> results(jobs.size());
  for_each_index(jobs.size(), exec, [&](std::size_t i) {
    const auto [r, j] = jobs[i];
    auto opts = alg.options(observe(c, r, policy, choices[r][j]));
    if (!all_options) opts.resize(1);
    results[i] = std::move(opts);
  });

  std::vector<RobotMoves> moves(n);
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto [r, j] = jobs[i];
    RobotMoves& m = moves[r];
    for (std::size_t o = 0; o < results[i].size(); ++o) {
      ++m.legal;
      const Point& p = results[i][o];
      if (std::find(m.destinations.begin(), m.destinations.end(), p) == m.destinations.end()) {
        m.destinations.push_back(p);
        m.witness.emplace_back(j, o);
      }
    }
  }
  return moves;
}

std::uint64_t successor_tuples(std::span<const RobotMoves> moves) {
  std::uint64_t total = 1;
  for (const RobotMoves& m : moves) {
    if (m.destinations.empty()) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / m.destinations.size()) {
      throw std::overflow_error("successor space exceeds 64 bits");
    }
    total *= m.destinations.size();
  }
  return total;
}

std::vector<Successor> expand_successors(const Configuration& c, std::span<const RobotMoves> moves,
                                         Execution exec) {
  if (moves.size() != c.size()) throw std::invalid_argument("moves do not match configuration");
  // intern destinations so a successor multiset is a sorted id vector
  std::vector<Point> table;
  std::vector<std::vector<std::uint32_t>> gid(moves.size());
  for (std::size_t r = 0; r < moves.size(); ++r) {
    for (const Point& p : moves[r].destinations) {
      auto it = std::find(table.begin(), table.end(), p);
      if (it == table.end()) {
        table.push_back(p);
        it = table.end() - 1;
      }
      gid[r].push_back(static_cast<std::uint32_t>(it - table.begin()));
    }
  }

  const std::uint64_t total = successor_tuples(moves);
  std::vector<FirstSeen> firsts;
  if (exec == Execution::Serial || total < 4096) {
    firsts = scan_range(0, total, gid);
  } else {
    const auto chunks = static_cast<std::size_t>(std::max(1, worker_threads()) * 4);
    std::vector<std::vector<FirstSeen>> partial(chunks);
    for_each_index(chunks, Execution::Parallel, [&](std::size_t k) {
      const std::uint64_t begin = total * k / chunks;
      const std::uint64_t end = total * (k + 1) / chunks;
      partial[k] = scan_range(begin, end, gid);
    });
    KeySet seen;
    for (auto& part : partial) {
      for (FirstSeen& f : part) {
        if (seen.insert(f.key).second) firsts.push_back(std::move(f));
      }
    }
  }

  std::vector<Successor> out;
  out.reserve(firsts.size());
  for (const FirstSeen& f : firsts) {
    Successor s;
    s.pick.resize(moves.size());
    tuple_key(f.index, gid, &s.pick);
    s.config.round = c.round + 1;
    for (std::size_t r = 0; r < moves.size(); ++r) s.config.positions.push_back(moves[r].destinations[s.pick[r]]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace gathersim
