#include "gathersim/model.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace gathersim {

namespace {

// All size-m subsets of `pool` (kept in pool order), lexicographic by position.
std::vector<IdSet> combinations(const IdSet& pool, std::size_t m) {
  std::vector<IdSet> out;
  if (m > pool.size()) return out;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    IdSet pick;
    pick.reserve(m);
    for (std::size_t i : idx) pick.push_back(pool[i]);
    out.push_back(std::move(pick));
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == pool.size() - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct Ranked {
  RobotId id;
  FieldScalar d;
};

// Eligible robots split into those that must be observed and the tied pool at
// the cut-off distance.
struct DistanceCut {
  IdSet strict;
  IdSet tied;
  std::size_t need_from_tied = 0;
};

DistanceCut distance_cut(const Configuration& c, RobotId observer, const IdSet& eligible,
                         std::size_t m) {
  DistanceCut cut;
  if (m == 0) return cut;
  std::vector<Ranked> ranked;
  ranked.reserve(eligible.size());
  for (RobotId id : eligible) ranked.push_back({id, sq_dist(c.positions[observer], c.positions[id])});
  std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) { return a.d < b.d; });
  const FieldScalar& threshold = ranked[m - 1].d;
  for (const Ranked& r : ranked) {
    if (r.d < threshold) {
      cut.strict.push_back(r.id);
    } else if (r.d == threshold) {
      cut.tied.push_back(r.id);
    }
  }
  std::sort(cut.tied.begin(), cut.tied.end());
  cut.need_from_tied = m - cut.strict.size();
  return cut;
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::vector<OccupiedPoint> occupied_points(const Configuration& c) {
  std::vector<Point> sorted = c.positions;
  std::sort(sorted.begin(), sorted.end());
  std::vector<OccupiedPoint> out;
  for (Point& p : sorted) {
    if (!out.empty() && out.back().point == p) {
      ++out.back().count;
    } else {
      out.push_back({std::move(p), 1});
    }
  }
  return out;
}

bool is_gathered(const Configuration& c) {
  return std::all_of(c.positions.begin(), c.positions.end(),
                     [&](const Point& p) { return p == c.positions.front(); });
}

std::size_t multiplicity_at(const Configuration& c, RobotId robot) {
  const Point& p = c.positions.at(robot);
  return static_cast<std::size_t>(std::count(c.positions.begin(), c.positions.end(), p));
}

std::string to_string(Model m) {
  switch (m) {
    case Model::Adversarial:
      return "adversarial";
    case Model::DistanceBased:
      return "distance";
    case Model::RelaxedAdversarial:
      return "relaxed";
  }
  return "?";
}

Model model_from_string(const std::string& s) {
  if (s == "adversarial") return Model::Adversarial;
  if (s == "distance") return Model::DistanceBased;
  if (s == "relaxed") return Model::RelaxedAdversarial;
  throw std::invalid_argument("unknown model '" + s + "'");
}

std::string to_string(TieBreak t) { return t == TieBreak::LowestId ? "lowest-id" : "highest-id"; }

TieBreak tiebreak_from_string(const std::string& s) {
  if (s == "lowest-id") return TieBreak::LowestId;
  if (s == "highest-id") return TieBreak::HighestId;
  throw std::invalid_argument("unknown tie-break '" + s + "'");
}

IdSet eligible_robots(const Configuration& c, RobotId observer, const DefectPolicy& policy) {
  if (observer >= c.size()) throw std::out_of_range("robot id out of range");
  IdSet out;
  const Point& self = c.positions[observer];
  for (RobotId id = 0; id < c.size(); ++id) {
    if (id == observer) continue;
    if (policy.model != Model::RelaxedAdversarial && c.positions[id] == self) continue;
    out.push_back(id);
  }
  return out;
}

std::size_t observed_count(const Configuration& c, RobotId observer, const DefectPolicy& policy) {
  if (policy.k < 1) throw std::invalid_argument("k must be positive");
  return std::min(static_cast<std::size_t>(policy.k), eligible_robots(c, observer, policy).size());
}

std::vector<IdSet> legal_choices(const Configuration& c, RobotId observer, const DefectPolicy& policy) {
  const IdSet eligible = eligible_robots(c, observer, policy);
  const std::size_t m = std::min(static_cast<std::size_t>(policy.k), eligible.size());
  if (policy.model != Model::DistanceBased) return combinations(eligible, m);

  const DistanceCut cut = distance_cut(c, observer, eligible, m);
  std::vector<IdSet> out;
  for (IdSet& extra : combinations(cut.tied, cut.need_from_tied)) {
    IdSet pick = cut.strict;
    pick.insert(pick.end(), extra.begin(), extra.end());
    std::sort(pick.begin(), pick.end());
    out.push_back(std::move(pick));
  }
  return out;
}

IdSet default_choice(const Configuration& c, RobotId observer, const DefectPolicy& policy) {
  IdSet eligible = eligible_robots(c, observer, policy);
  const std::size_t m = std::min(static_cast<std::size_t>(policy.k), eligible.size());
  if (policy.model != Model::DistanceBased) {
    eligible.resize(m);
    return eligible;
  }
  const DistanceCut cut = distance_cut(c, observer, eligible, m);
  IdSet pick = cut.strict;
  IdSet tied = cut.tied;
  if (policy.tiebreak == TieBreak::HighestId) std::reverse(tied.begin(), tied.end());
  pick.insert(pick.end(), tied.begin(), tied.begin() + static_cast<std::ptrdiff_t>(cut.need_from_tied));
  std::sort(pick.begin(), pick.end());
  return pick;
}

void check_choice(const Configuration& c, RobotId observer, const DefectPolicy& policy,
                  const IdSet& chosen) {
  const IdSet eligible = eligible_robots(c, observer, policy);
  const std::size_t m = std::min(static_cast<std::size_t>(policy.k), eligible.size());
  const std::string who = "robot " + std::to_string(observer) + ": ";
  if (chosen.size() != m) {
    throw IllegalChoice(who + "observed " + std::to_string(chosen.size()) + " robots, expected " +
                        std::to_string(m));
  }
  IdSet sorted = chosen;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw IllegalChoice(who + "duplicate robot in observed set");
  }
  for (RobotId id : sorted) {
    if (!std::binary_search(eligible.begin(), eligible.end(), id)) {
      throw IllegalChoice(who + "robot " + std::to_string(id) + " is not eligible");
    }
  }
  if (policy.model == Model::DistanceBased) {
    const DistanceCut cut = distance_cut(c, observer, eligible, m);
    for (RobotId id : cut.strict) {
      if (!std::binary_search(sorted.begin(), sorted.end(), id)) {
        throw IllegalChoice(who + "nearer robot " + std::to_string(id) + " was skipped");
      }
    }
    for (RobotId id : sorted) {
      const bool ok = std::find(cut.strict.begin(), cut.strict.end(), id) != cut.strict.end() ||
                      std::binary_search(cut.tied.begin(), cut.tied.end(), id);
      if (!ok) throw IllegalChoice(who + "robot " + std::to_string(id) + " is not among the nearest");
    }
  }
}

Observation observe(const Configuration& c, RobotId observer, const DefectPolicy& policy,
                    const IdSet& chosen) {
  check_choice(c, observer, policy, chosen);
  const Point& self = c.positions[observer];

  std::map<Point, std::size_t> seen;
  std::size_t colocated_seen = 0;
  for (RobotId id : chosen) {
    if (c.positions[id] == self) {
      ++colocated_seen;
    } else {
      ++seen[c.positions[id]];
    }
  }

  Observation obs;
  obs.self_point = self;
  obs.self_accompanied = policy.model == Model::RelaxedAdversarial ? colocated_seen > 0
                                                                     : multiplicity_at(c, observer) > 1;
  seen.emplace(self, 0);
  obs.opset.reserve(seen.size());
  for (const auto& [p, n] : seen) {
    const bool multi = p == self ? obs.self_accompanied : n >= 2;
    obs.opset.push_back({p, multi});
  }
  return obs;
}

ChoiceSpace::ChoiceSpace(const Configuration& c, const DefectPolicy& policy) {
  per_robot_.reserve(c.size());
  for (RobotId r = 0; r < c.size(); ++r) per_robot_.push_back(legal_choices(c, r, policy));
}

std::uint64_t ChoiceSpace::size() const {
  std::uint64_t total = 1;
  for (const auto& opts : per_robot_) {
    if (opts.empty()) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / opts.size()) {
      throw std::overflow_error("choice space exceeds 64 bits");
    }
    total *= opts.size();
  }
  return total;
}

std::vector<IdSet> ChoiceSpace::at(std::uint64_t index) const {
  std::vector<IdSet> out(per_robot_.size());
  for (std::size_t r = per_robot_.size(); r-- > 0;) {
    const std::uint64_t radix = per_robot_[r].size();
    out[r] = per_robot_[r][index % radix];
    index /= radix;
  }
  return out;
}

std::size_t SimilaritySignature::hash() const {
  std::size_t h = counts.size();
  for (std::size_t n : counts) h = hash_combine(h, n);
  for (const auto& [a, b, d] : pairs) {
    h = hash_combine(h, a);
    h = hash_combine(h, b);
    h = hash_combine(h, d.hash());
  }
  return h;
}

SimilaritySignature similarity_signature(const Configuration& c) {
  const auto occ = occupied_points(c);
  SimilaritySignature sig;
  for (const auto& o : occ) sig.counts.push_back(o.count);
  std::sort(sig.counts.begin(), sig.counts.end());
  if (occ.size() < 2) return sig;

  std::vector<FieldScalar> d;
  FieldScalar max;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    for (std::size_t j = i + 1; j < occ.size(); ++j) {
      d.push_back(sq_dist(occ[i].point, occ[j].point));
      if (d.back() > max) max = d.back();
    }
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    for (std::size_t j = i + 1; j < occ.size(); ++j, ++n) {
      const auto [lo, hi] = std::minmax(occ[i].count, occ[j].count);
      sig.pairs.emplace_back(lo, hi, d[n] / max);
    }
  }
  std::sort(sig.pairs.begin(), sig.pairs.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return FieldScalar::structural_less(std::get<2>(a), std::get<2>(b));
  });
  return sig;
}

bool are_similar(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) return false;
  const auto pa = occupied_points(a);
  const auto pb = occupied_points(b);
  const std::size_t n = pa.size();
  if (n != pb.size()) return false;
  if (n == 1) return pa[0].count == pb[0].count;

  auto distances = [n](const std::vector<OccupiedPoint>& pts, FieldScalar& max) {
    std::vector<FieldScalar> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        m[i * n + j] = m[j * n + i] = sq_dist(pts[i].point, pts[j].point);
        if (m[i * n + j] > max) max = m[i * n + j];
      }
    }
    return m;
  };
  FieldScalar max_a, max_b;
  const auto da = distances(pa, max_a);
  const auto db = distances(pb, max_b);

  // Distances of b scaled by max_a must equal distances of a scaled by max_b
  // under the bijection; a distance-preserving bijection of planar point sets
  // extends to an isometry.
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || pa[i].count != pb[j].count) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < i && ok; ++prev) {
        ok = db[j * n + map[prev]] * max_a == da[i * n + prev] * max_b;
      }
      if (!ok) continue;
      used[j] = true;
      map[i] = j;
      if (extend(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return extend(0);
}

std::vector<Point> position_multiset(const Configuration& c) {
  std::vector<Point> out = c.positions;
  std::sort(out.begin(), out.end(), Point::structural_less);
  return out;
}

}  // namespace gathersim
