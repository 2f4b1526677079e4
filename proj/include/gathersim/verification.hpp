#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gathersim/engine.hpp"
#include "gathersim/kernels.hpp"

namespace gathersim {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionViolation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckOptions {
  /// Maximum successor tuples evaluated before giving up.
  std::uint64_t budget = 10'000'000;
  /// Branch over every admissible destination (the "arbitrary multi point"
  /// included), not just the algorithm's own pick. Similarity memoization
  /// is only sound with this on; with it off, memo keys are exact position
  /// multisets.
  bool adversarial_selector = true;
  bool memoize = true;
  Execution exec = Execution::Parallel;
};

struct Verdict {
  enum class Outcome { AllGatherWithin, Counterexample };
  Outcome outcome = Outcome::AllGatherWithin;
  /// Worst-case rounds to gathering over every explored schedule.
  int rounds = 0;
  std::optional<Trace> trace;
  /// Adversary assignments covered (observed sets times destination options).
  std::uint64_t explored = 0;
  /// Distinct-destination tuples actually evaluated.
  std::uint64_t expansions = 0;
  /// Memo hits confirmed by the exact similarity check.
  std::uint64_t memo_merges = 0;

  bool holds() const { return outcome == Outcome::AllGatherWithin; }
  std::string to_string() const;
};

/// Throws PreconditionViolation unless (N, k, model) suit the algorithm:
/// alg1 needs k = N - 2; alg2 needs N = 4, k = 2 and no relaxed model.
void check_model_consistency(const Configuration& c, const std::string& alg, const DefectPolicy& policy);

/// Explores every adversary assignment (and tie resolution) for up to
/// `bound` rounds. Returns AllGatherWithin(worst) or the first
/// counterexample in enumeration order, as a trace replayable by run().
Verdict exhaustive_check(const Configuration& c, const std::string& alg, const DefectPolicy& policy,
                         int bound, const CheckOptions& options = {});
Verdict exhaustive_check(const Configuration& c, const DestinationFunction& alg,
                         const DefectPolicy& policy, int bound, const CheckOptions& options = {});

/// Bounded search for an adversary schedule that revisits a similarity
/// class without gathering. A Counterexample carries a CycleDetected trace
/// when a lasso was found, otherwise a RoundLimitReached trace. Says
/// nothing beyond `depth`.
Verdict adversary_search(const Configuration& c, const DestinationFunction& alg,
                         const DefectPolicy& policy, int depth, const CheckOptions& options = {});

/// alg1 under adversarial (N, N-2), N >= 5, exhaustive.
/// 3.2: at least three accompanied robots, within 2 rounds.
/// 3.3: exactly two accompanied robots sharing a point, within 2 rounds.
/// 3.4: every robot single, within 3 rounds.
bool check_lemma_3_2(const Configuration& c, const CheckOptions& options = {});
bool check_lemma_3_3(const Configuration& c, const CheckOptions& options = {});
bool check_lemma_3_4(const Configuration& c, const CheckOptions& options = {});

/// For two distinct points of a 4-robot configuration: opposite across every
/// other pair, i.e. a diagonal of the quadrilateral.
bool is_diagonal(const Configuration& c, RobotId a, RobotId b);

/// One tie-resolution branch of a distance-based (4,2) round.
struct ViewBranch {
  std::vector<IdSet> observed;
  bool views_distinct = false;
  // assertions, evaluated only when views_distinct
  bool convex = true;
  bool mutual_blindness = true;
  bool blind_pairs_diagonal = true;
  /// No side strictly longer than a diagonal.
  bool sides_not_longer = true;

  bool holds() const {
    return !views_distinct || (convex && mutual_blindness && blind_pairs_diagonal && sides_not_longer);
  }
};

struct ViewLemmaReport {
  std::vector<ViewBranch> branches;
  bool all_hold() const;
  bool any_distinct() const;
};

/// Convex position, mutual non-observation, diagonal blind pairs and no
/// side longer than a diagonal, on every branch where all four views differ.
/// Requires four single robots.
ViewLemmaReport check_view_lemmas_42(const Configuration& c);

struct LongestLineBranch {
  std::vector<IdSet> observed;
  std::size_t longest_count = 0;
  /// Rounds allowed before two robots must share a point: 1, 2, 2.
  int allowed_rounds = 0;
  bool accompanied_in_time = false;
  /// Three longest: round-1 shape is a proper parallelogram whose longest
  /// pair is unique and a diagonal. Four longest: round-1 shape is not in
  /// convex position. True when not applicable.
  bool intermediate_shape_ok = true;
  /// Round-1 configuration of this branch.
  Configuration after_first;

  bool holds() const { return accompanied_in_time && intermediate_shape_ok; }
};

struct LongestLineReport {
  std::vector<LongestLineBranch> branches;
  bool all_hold() const;
};

/// Branches with all views distinct; round 2 is explored over every tie
/// resolution.
LongestLineReport check_longest_line_lemmas(const Configuration& c);

/// Seeded random generic 4-robot configurations run under alg2 with the
/// default tie-break.
struct SamplingReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  int worst_rounds = 0;
  std::optional<std::size_t> first_failure;
};

SamplingReport sample_theorem_4_9(std::size_t samples, std::uint64_t seed, Execution exec,
                                  int bound = 4);

}  // namespace gathersim
