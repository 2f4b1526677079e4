#include "gathersim/verification.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <unordered_map>

#include "gathersim/algorithms.hpp"
#include "gathersim/configs.hpp"

namespace gathersim {

std::string Verdict::to_string() const {
  if (holds()) return "AllGatherWithin(" + std::to_string(rounds) + ")";
  return "Counterexample(" + (trace ? trace->verdict.to_string() : std::string("?")) + ")";
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

bool has_accompanied(const Configuration& c) {
  const auto occ = occupied_points(c);
  return std::any_of(occ.begin(), occ.end(), [](const OccupiedPoint& o) { return o.count >= 2; });
}

struct PositionsLess {
  bool operator()(const std::vector<Point>& a, const std::vector<Point>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), Point::structural_less);
  }
};

// Depth-bounded worst-case search over adversary schedules with a memo of
// per-class results. A class result is either the exact worst-case round
// count or a horizon it is known to exceed.
class Explorer {
 public:
  Explorer(const DestinationFunction& alg, const DefectPolicy& policy, const CheckOptions& options)
      : alg_(alg), policy_(policy), options_(options) {}

  struct Expansion {
    std::vector<RobotMoves> moves;
    std::vector<Successor> successors;
  };

  Expansion expand(const Configuration& c) {
    Expansion ex;
    ex.moves = moves(c);
    const std::uint64_t tuples = successor_tuples(ex.moves);
    charge(tuples);
    ex.successors = expand_successors(c, ex.moves, options_.exec);
    return ex;
  }

  std::vector<RobotMoves> moves(const Configuration& c) {
    auto m = robot_moves(c, alg_, policy_, options_.adversarial_selector, options_.exec);
    std::uint64_t assignments = 1;
    for (const RobotMoves& rm : m) assignments = saturating_mul(assignments, rm.legal);
    explored_ = saturating_add(explored_, assignments);
    return m;
  }

  /// Worst-case rounds to gathering if every schedule gathers within r.
  std::optional<int> worst(const Configuration& c, int r) {
    if (is_gathered(c)) return 0;
    Entry* e = options_.memoize ? lookup(c) : nullptr;
    if (e != nullptr) {
      if (e->exact >= 0) return e->exact <= r ? std::optional<int>(e->exact) : std::nullopt;
      if (e->fails_beyond >= r) return std::nullopt;
    }
    auto fail = [&]() -> std::optional<int> {
      if (e != nullptr) e->fails_beyond = std::max(e->fails_beyond, r);
      return std::nullopt;
    };
    if (r == 0) return fail();

    const std::vector<RobotMoves> m = moves(c);
    if (all_to_one_point(m)) {
      charge(1);
      if (e != nullptr) e->exact = 1;
      return 1;
    }
    // some schedule leaves the robots apart after this round
    if (r == 1) return fail();

    const std::uint64_t tuples = successor_tuples(m);
    charge(tuples);
    const auto successors = expand_successors(c, m, options_.exec);
    int best = 1;
    for (const Successor& s : successors) {
      const auto w = worst(s.config, r - 1);
      if (!w) return fail();
      best = std::max(best, *w + 1);
    }
    if (e != nullptr) e->exact = best;
    return best;
  }

  std::uint64_t explored() const { return explored_; }
  std::uint64_t expansions() const { return expansions_; }
  std::uint64_t merges() const { return merges_; }

 private:
  struct Entry {
    Configuration rep;
    int exact = -1;
    int fails_beyond = -1;
  };

  static bool all_to_one_point(const std::vector<RobotMoves>& m) {
    for (const RobotMoves& rm : m) {
      if (rm.destinations.size() != 1 || rm.destinations[0] != m.front().destinations[0]) return false;
    }
    return true;
  }

  void charge(std::uint64_t tuples) {
    expansions_ = saturating_add(expansions_, tuples);
    if (expansions_ > options_.budget) {
      throw BudgetExceeded("state-space budget of " + std::to_string(options_.budget) +
                           " expansions exhausted");
    }
  }

  Entry* lookup(const Configuration& c) {
    if (!options_.adversarial_selector) {
      auto& slot = exact_memo_[position_multiset(c)];
      if (!slot) slot = std::make_unique<Entry>(Entry{c});
      return slot.get();
    }
    auto& bucket = memo_[similarity_signature(c)];
    for (auto& entry : bucket) {
      if (are_similar(entry->rep, c)) {
        ++merges_;
        return entry.get();
      }
    }
    bucket.push_back(std::make_unique<Entry>(Entry{c}));
    return bucket.back().get();
  }

  const DestinationFunction& alg_;
  DefectPolicy policy_;
  CheckOptions options_;
  std::unordered_map<SimilaritySignature, std::vector<std::unique_ptr<Entry>>, SignatureHash> memo_;
  std::map<std::vector<Point>, std::unique_ptr<Entry>, PositionsLess> exact_memo_;
  std::uint64_t explored_ = 0;
  std::uint64_t expansions_ = 0;
  std::uint64_t merges_ = 0;
};

RoundChoice choice_for(const Configuration& c, const DefectPolicy& policy, const Explorer::Expansion& ex,
                       const Successor& s) {
  RoundChoice choice;
  for (RobotId r = 0; r < c.size(); ++r) {
    const auto [j, o] = ex.moves[r].witness[s.pick[r]];
    choice.observed.push_back(legal_choices(c, r, policy)[j]);
    choice.option.push_back(o);
  }
  return choice;
}

Trace replay(const Configuration& start, const DestinationFunction& alg, const DefectPolicy& policy,
             std::vector<RoundChoice> script) {
  const int rounds = static_cast<int>(script.size());
  return run(start, alg, policy, scripted_strategy(std::move(script)), rounds, {CycleMode::Stop});
}

// First failing schedule in enumeration order, given that worst(start, bound) failed.
std::vector<RoundChoice> failing_schedule(Explorer& explorer, const Configuration& start,
                                          const DefectPolicy& policy, int bound) {
  std::vector<RoundChoice> script;
  Configuration cur = start;
  for (int r = bound; r > 0 && !is_gathered(cur); --r) {
    const auto ex = explorer.expand(cur);
    const Successor* bad = nullptr;
    for (const Successor& s : ex.successors) {
      if (!explorer.worst(s.config, r - 1)) {
        bad = &s;
        break;
      }
    }
    if (bad == nullptr) throw std::logic_error("failing schedule vanished during reconstruction");
    script.push_back(choice_for(cur, policy, ex, *bad));
    cur = bad->config;
  }
  return script;
}

Configuration at_round_zero(Configuration c) {
  c.round = 0;
  return c;
}

void require_alg1_setting(const Configuration& c) {
  if (c.size() < 5) throw PreconditionViolation("lemma checks need N >= 5");
}

DefectPolicy alg1_policy(const Configuration& c) {
  return {Model::Adversarial, static_cast<int>(c.size()) - 2, TieBreak::LowestId};
}

std::size_t accompanied_robots(const Configuration& c) {
  std::size_t n = 0;
  for (const auto& o : occupied_points(c)) {
    if (o.count >= 2) n += o.count;
  }
  return n;
}

bool is_parallelogram(const std::vector<Point>& p, std::pair<IndexPair, IndexPair>* diagonals) {
  static const std::pair<IndexPair, IndexPair> pairings[] = {
      {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  for (const auto& [d1, d2] : pairings) {
    if (p[d1.first] + p[d1.second] == p[d2.first] + p[d2.second] &&
        orientation(p[d1.first], p[d1.second], p[d2.first]) != 0) {
      if (diagonals != nullptr) *diagonals = {d1, d2};
      return true;
    }
  }
  return false;
}

}  // namespace

void check_model_consistency(const Configuration& c, const std::string& alg, const DefectPolicy& policy) {
  const auto n = static_cast<int>(c.size());
  if (n < 1) throw PreconditionViolation("empty configuration");
  if (policy.k < 1 || policy.k > n - 1) {
    throw PreconditionViolation("k must satisfy 1 <= k <= N-1 (N=" + std::to_string(n) + ", k=" +
                                std::to_string(policy.k) + ")");
  }
  if (alg == "alg1" && policy.k != n - 2) throw PreconditionViolation("alg1 runs with k = N - 2");
  if (alg == "alg2") {
    if (n != 4 || policy.k != 2) throw PreconditionViolation("alg2 runs with N = 4, k = 2");
    if (policy.model == Model::RelaxedAdversarial) throw PreconditionViolation("alg2 is not defined for the relaxed model");
  }
}

Verdict exhaustive_check(const Configuration& c, const std::string& alg, const DefectPolicy& policy,
                         int bound, const CheckOptions& options) {
  return exhaustive_check(c, algorithm_by_name(alg), policy, bound, options);
}

Verdict exhaustive_check(const Configuration& c, const DestinationFunction& alg,
                         const DefectPolicy& policy, int bound, const CheckOptions& options) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  check_model_consistency(c, alg.name(), policy);
  const Configuration start = at_round_zero(c);
  Explorer explorer(alg, policy, options);
  Verdict v;
  if (const auto w = explorer.worst(start, bound)) {
    v.outcome = Verdict::Outcome::AllGatherWithin;
    v.rounds = *w;
  } else {
    v.outcome = Verdict::Outcome::Counterexample;
    v.rounds = bound;
    v.trace = replay(start, alg, policy, failing_schedule(explorer, start, policy, bound));
  }
  v.explored = explorer.explored();
  v.expansions = explorer.expansions();
  v.memo_merges = explorer.merges();
  return v;
}

Verdict adversary_search(const Configuration& c, const DestinationFunction& alg,
                         const DefectPolicy& policy, int depth, const CheckOptions& options) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  check_model_consistency(c, alg.name(), policy);
  const Configuration start = at_round_zero(c);
  Explorer explorer(alg, policy, options);
  Verdict v;
  auto finish = [&] {
    v.explored = explorer.explored();
    v.expansions = explorer.expansions();
    v.memo_merges = explorer.merges();
    return v;
  };
  if (const auto w = explorer.worst(start, depth)) {
    v.rounds = *w;
    return finish();
  }
  v.outcome = Verdict::Outcome::Counterexample;
  v.rounds = depth;

  // lasso search among successors that do not certainly gather
  std::vector<Configuration> path{start};
  std::vector<RoundChoice> script;
  std::function<bool(int)> dfs = [&](int remaining) {
    if (remaining == 0) return false;
    const Configuration cur = path.back();
    const auto ex = explorer.expand(cur);
    for (const Successor& s : ex.successors) {
      if (is_gathered(s.config) || explorer.worst(s.config, remaining - 1)) continue;
      script.push_back(choice_for(cur, policy, ex, s));
      const SimilaritySignature sig = similarity_signature(s.config);
      for (const Configuration& seen : path) {
        if (similarity_signature(seen) == sig && are_similar(seen, s.config)) return true;
      }
      path.push_back(s.config);
      if (dfs(remaining - 1)) return true;
      path.pop_back();
      script.pop_back();
    }
    return false;
  };
  if (!dfs(depth)) script = failing_schedule(explorer, start, policy, depth);
  v.trace = replay(start, alg, policy, std::move(script));
  return finish();
}

bool check_lemma_3_2(const Configuration& c, const CheckOptions& options) {
  require_alg1_setting(c);
  if (accompanied_robots(c) < 3) throw PreconditionViolation("lemma 3.2 needs at least three accompanied robots");
  return exhaustive_check(c, alg1(), alg1_policy(c), 2, options).holds();
}

bool check_lemma_3_3(const Configuration& c, const CheckOptions& options) {
  require_alg1_setting(c);
  const auto occ = occupied_points(c);
  const auto pairs = std::count_if(occ.begin(), occ.end(), [](const auto& o) { return o.count == 2; });
  if (pairs != 1 || accompanied_robots(c) != 2) {
    throw PreconditionViolation("lemma 3.3 needs exactly two accompanied robots at one point");
  }
  return exhaustive_check(c, alg1(), alg1_policy(c), 2, options).holds();
}

bool check_lemma_3_4(const Configuration& c, const CheckOptions& options) {
  require_alg1_setting(c);
  if (accompanied_robots(c) != 0) throw PreconditionViolation("lemma 3.4 needs every robot single");
  return exhaustive_check(c, alg1(), alg1_policy(c), 3, options).holds();
}

bool is_diagonal(const Configuration& c, RobotId a, RobotId b) {
  if (c.size() != 4) throw std::invalid_argument("is_diagonal expects four robots");
  std::vector<RobotId> others;
  for (RobotId r = 0; r < 4; ++r) {
    if (r != a && r != b) others.push_back(r);
  }
  const auto& p = c.positions;
  return orientation(p[a], p[b], p[others[0]]) * orientation(p[a], p[b], p[others[1]]) < 0;
}

bool ViewLemmaReport::all_hold() const {
  return std::all_of(branches.begin(), branches.end(), [](const ViewBranch& b) { return b.holds(); });
}

bool ViewLemmaReport::any_distinct() const {
  return std::any_of(branches.begin(), branches.end(), [](const ViewBranch& b) { return b.views_distinct; });
}

namespace {

void require_four_singles(const Configuration& c) {
  if (c.size() != 4) throw PreconditionViolation("distance-based (4,2) lemmas need four robots");
  if (accompanied_robots(c) != 0) throw PreconditionViolation("distance-based (4,2) lemmas need single robots");
}

const DefectPolicy kDistance42{Model::DistanceBased, 2, TieBreak::LowestId};

// view[r] = r plus the robots it observes; blind[r] = the one robot it misses.
struct Views {
  std::vector<IdSet> view;
  std::vector<RobotId> blind;
  bool distinct = false;
};

Views views_of(const std::vector<IdSet>& observed) {
  Views v;
  for (RobotId r = 0; r < observed.size(); ++r) {
    IdSet set = observed[r];
    set.push_back(r);
    std::sort(set.begin(), set.end());
    RobotId missing = 0;
    while (std::binary_search(set.begin(), set.end(), missing)) ++missing;
    v.view.push_back(std::move(set));
    v.blind.push_back(missing);
  }
  std::vector<IdSet> sorted = v.view;
  std::sort(sorted.begin(), sorted.end());
  v.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return v;
}

}  // namespace

ViewLemmaReport check_view_lemmas_42(const Configuration& c) {
  require_four_singles(c);
  ViewLemmaReport report;
  const ChoiceSpace space(c, kDistance42);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    ViewBranch b;
    b.observed = space.at(i);
    const Views v = views_of(b.observed);
    b.views_distinct = v.distinct;
    if (b.views_distinct) {
      b.convex = is_convex_position(c.positions);
      for (RobotId r = 0; r < 4; ++r) {
        b.mutual_blindness = b.mutual_blindness && v.blind[v.blind[r]] == r;
        b.blind_pairs_diagonal = b.blind_pairs_diagonal && b.convex && is_diagonal(c, r, v.blind[r]);
      }
      if (b.convex) {
        FieldScalar shortest_diagonal;
        FieldScalar longest_side;
        bool first_diagonal = true;
        for (RobotId x = 0; x < 4; ++x) {
          for (RobotId y = x + 1; y < 4; ++y) {
            const FieldScalar len = sq_dist(c.positions[x], c.positions[y]);
            if (is_diagonal(c, x, y)) {
              shortest_diagonal = first_diagonal ? len : std::min(shortest_diagonal, len);
              first_diagonal = false;
            } else {
              longest_side = std::max(longest_side, len);
            }
          }
        }
        b.sides_not_longer = longest_side <= shortest_diagonal;
      } else {
        b.sides_not_longer = false;
      }
    }
    report.branches.push_back(std::move(b));
  }
  return report;
}

bool LongestLineReport::all_hold() const {
  return std::all_of(branches.begin(), branches.end(), [](const LongestLineBranch& b) { return b.holds(); });
}

LongestLineReport check_longest_line_lemmas(const Configuration& c) {
  require_four_singles(c);
  LongestLineReport report;
  const DestinationFunction alg = alg2();
  const ChoiceSpace space(c, kDistance42);
  const std::size_t longest = longest_pairs(c.positions).size();
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    RoundChoice choice{space.at(i), std::vector<std::size_t>(4, 0)};
    if (!views_of(choice.observed).distinct) continue;

    LongestLineBranch b;
    b.observed = choice.observed;
    b.longest_count = longest;
    b.allowed_rounds = longest <= 2 ? 1 : (longest <= 4 ? 2 : 0);
    b.after_first = step(c, alg, kDistance42, choice).first;
    const Configuration& next = b.after_first;
    const bool merged_now = has_accompanied(next);

    if (b.allowed_rounds == 1) {
      b.accompanied_in_time = merged_now;
    } else if (b.allowed_rounds == 2) {
      b.accompanied_in_time = merged_now;
      if (!merged_now) {
        b.accompanied_in_time = true;
        const ChoiceSpace second(next, kDistance42);
        for (std::uint64_t j = 0; j < second.size() && b.accompanied_in_time; ++j) {
          RoundChoice c2{second.at(j), std::vector<std::size_t>(4, 0)};
          b.accompanied_in_time = has_accompanied(step(next, alg, kDistance42, c2).first);
        }
      }
      if (longest == 3) {
        std::pair<IndexPair, IndexPair> diag;
        const auto lp = merged_now ? std::vector<IndexPair>{} : longest_pairs(next.positions);
        b.intermediate_shape_ok = !merged_now && is_parallelogram(next.positions, &diag) && lp.size() == 1 &&
                                  (lp[0] == diag.first || lp[0] == diag.second);
      } else {
        b.intermediate_shape_ok = !merged_now && !is_convex_position(next.positions);
      }
    }
    report.branches.push_back(std::move(b));
  }
  return report;
}

SamplingReport sample_theorem_4_9(std::size_t samples, std::uint64_t seed, Execution exec, int bound) {
  const DestinationFunction alg = alg2();
  const Strategy strategy = default_strategy();
  std::vector<int> rounds(samples, -1);
  for_each_index(samples, exec, [&](std::size_t i) {
    std::mt19937_64 rng(seed + i);
    const Configuration c = random_generic_config(4, rng, 8);
    const Trace t = run(c, alg, kDistance42, strategy, bound, {CycleMode::Off});
    if (t.verdict.kind == TraceVerdict::Kind::Gathered) rounds[i] = t.verdict.value;
  });
  SamplingReport report;
  report.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    if (rounds[i] < 0) {
      ++report.failures;
      if (!report.first_failure) report.first_failure = i;
    } else {
      report.worst_rounds = std::max(report.worst_rounds, rounds[i]);
    }
  }
  return report;
}

}  // namespace gathersim
