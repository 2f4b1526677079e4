#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gathersim/geometry.hpp"

namespace gathersim {

using RobotId = std::size_t;
using IdSet = std::vector<RobotId>;

/// Robot positions in the global frame at a round boundary. Index = robot id.
struct Configuration {
  std::vector<Point> positions;
  int round = 0;

  std::size_t size() const { return positions.size(); }
};

struct OccupiedPoint {
  Point point;
  std::size_t count = 0;
  friend bool operator==(const OccupiedPoint&, const OccupiedPoint&) = default;
};

/// Distinct positions with multiplicities, lexicographic by coordinates.
std::vector<OccupiedPoint> occupied_points(const Configuration& c);
bool is_gathered(const Configuration& c);
/// Number of robots at the same position as `robot` (including itself).
std::size_t multiplicity_at(const Configuration& c, RobotId robot);

struct ObservedPoint {
  Point point;
  bool multi = false;
  friend bool operator==(const ObservedPoint&, const ObservedPoint&) = default;
};

/// One robot's Look result. `opset` is sorted lexicographically and contains
/// the observer's own point exactly once, flagged multi iff the observer
/// believes itself accompanied.
struct Observation {
  std::vector<ObservedPoint> opset;
  Point self_point;
  bool self_accompanied = false;

  friend bool operator==(const Observation&, const Observation&) = default;
};

enum class Model { Adversarial, DistanceBased, RelaxedAdversarial };
enum class TieBreak { LowestId, HighestId };

std::string to_string(Model m);
Model model_from_string(const std::string& s);
std::string to_string(TieBreak t);
TieBreak tiebreak_from_string(const std::string& s);

/// Observation-selection rule of the (N,k)-defected model.
struct DefectPolicy {
  Model model = Model::Adversarial;
  int k = 1;
  TieBreak tiebreak = TieBreak::LowestId;
};

struct IllegalChoice : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Robots the observer may be shown. Adversarial and distance-based exclude
/// everyone at the observer's point; the relaxed variant excludes only the
/// observer itself.
IdSet eligible_robots(const Configuration& c, RobotId observer, const DefectPolicy& policy);

/// min(k, |eligible|).
std::size_t observed_count(const Configuration& c, RobotId observer, const DefectPolicy& policy);

/// Every legal observed set for one observer, each sorted ascending, in a
/// deterministic order. For the distance-based variant these are the k
/// nearest under every tie resolution.
std::vector<IdSet> legal_choices(const Configuration& c, RobotId observer, const DefectPolicy& policy);

/// Lowest ids first (adversarial, relaxed) or nearest with the policy's
/// tie-break (distance-based).
IdSet default_choice(const Configuration& c, RobotId observer, const DefectPolicy& policy);

/// Throws IllegalChoice unless `chosen` is a legal observed set.
void check_choice(const Configuration& c, RobotId observer, const DefectPolicy& policy,
                  const IdSet& chosen);

Observation observe(const Configuration& c, RobotId observer, const DefectPolicy& policy,
                    const IdSet& chosen);

/// All per-robot assignments of observed sets, indexed in mixed radix with
/// robot 0 most significant.
class ChoiceSpace {
 public:
  ChoiceSpace(const Configuration& c, const DefectPolicy& policy);

  /// Throws std::overflow_error if the count does not fit in 64 bits.
  std::uint64_t size() const;
  std::vector<IdSet> at(std::uint64_t index) const;
  const std::vector<IdSet>& options(RobotId robot) const { return per_robot_[robot]; }
  std::size_t robots() const { return per_robot_.size(); }

 private:
  std::vector<std::vector<IdSet>> per_robot_;
};

inline ChoiceSpace enumerate_choices(const Configuration& c, const DefectPolicy& policy) {
  return ChoiceSpace(c, policy);
}

/// Congruence-class fingerprint up to similarity: occupied-point counts plus
/// every pairwise squared distance divided by the largest one, each tagged
/// with the multiplicities of its endpoints. Not a complete invariant.
struct SimilaritySignature {
  std::vector<std::size_t> counts;
  std::vector<std::tuple<std::size_t, std::size_t, FieldScalar>> pairs;

  friend bool operator==(const SimilaritySignature&, const SimilaritySignature&) = default;
  std::size_t hash() const;
};

struct SignatureHash {
  std::size_t operator()(const SimilaritySignature& s) const { return s.hash(); }
};

SimilaritySignature similarity_signature(const Configuration& c);

/// Exact: true iff a similarity (reflections included) maps the occupied
/// points of `a` onto those of `b` with matching multiplicities.
bool are_similar(const Configuration& a, const Configuration& b);

/// Positions sorted structurally; equal keys mean equal position multisets.
std::vector<Point> position_multiset(const Configuration& c);

}  // namespace gathersim
