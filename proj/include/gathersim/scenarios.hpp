#pragma once

#include <array>
#include <vector>

#include "gathersim/engine.hpp"

namespace gathersim {

/// alg1 under adversarial (4,2) from the equilateral triangle with a robot at
/// its center. The adversary is found by search each round so that the next
/// configuration is similar to the current one. Throws std::runtime_error if
/// some round admits no such assignment.
Trace scenario_alg1_n4_cycle(int rounds = 6);

/// Destination rule for a robot that observes exactly one other robot q:
/// move to scale * Rot(-30 deg * angle_steps)(q), in the robot's local frame.
struct LocalFrameRule {
  FieldScalar scale;
  int angle_steps = 0;
};

/// Local frames for the equilateral demonstrator: x axis toward the centroid,
/// y axis counter-clockwise of it (A) or clockwise (B).
enum class Chirality { A, B };

struct Tri31Outcome {
  Chirality chirality = Chirality::A;
  Configuration successor;
  bool gathered = false;
  /// Invariant under the 120 degree rotation about the initial centroid.
  bool c3_symmetric = false;
};

struct Tri31Report {
  LocalFrameRule rule;
  Configuration start;
  /// Every robot's local view, identical across robots for each chirality.
  bool views_identical = false;
  std::array<Tri31Outcome, 2> outcomes;
  bool witness() const { return !outcomes[0].gathered || !outcomes[1].gathered; }
  bool symmetric() const { return outcomes[0].c3_symmetric && outcomes[1].c3_symmetric; }
};

/// Three robots on the equilateral triangle, r_i observing r_{i+1 mod 3}
/// (distance-based (3,1) view). Requires radicand 3.
Tri31Report scenario_tri31(const LocalFrameRule& rule);

struct RelaxedReport {
  Trace trace;
  /// Squared distance between the two occupied points at rounds 0..rounds.
  std::vector<FieldScalar> sq_distances;
  bool two_points_every_round = false;
  bool never_gathered = false;
  /// N = 4: positions at round t and t + 2 coincide for every t.
  bool period_two = false;
  /// N >= 5: sq_distances[t] == sq_distances[0] / 4^t.
  bool quarter_decay = false;
};

/// alg1 under relaxed adversarial (N, N-2), starting from two groups at
/// (0,0) and (8,0): 2 + 2 for N = 4, 2 + (N-2) otherwise. Each observer is
/// shown every robot at the other point, then co-located robots up to k.
RelaxedReport scenario_relaxed(std::size_t n, int rounds = 10);

/// The adversary used by scenario_relaxed.
Strategy relaxed_two_group_strategy();

}  // namespace gathersim
