#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gathersim/engine.hpp"

namespace gathersim {

struct MalformedObservation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Which branch of the shared if-chain an observation falls into. The self
/// point counts as multi iff the observer is accompanied.
enum class DecisionCase {
  AllMulti,          ///< every observed point multi: go to the SEC center
  SingleSeesMulti,   ///< single observer, some multi point: go to a multi point
  NoMulti,           ///< no multi point anywhere
  AccompaniedStays,  ///< accompanied observer, some non-multi point: stay
};

DecisionCase decision_case(const Observation& obs);

/// Throws MalformedObservation if the self point is missing, duplicated, or
/// flagged inconsistently, or the opset is unsorted.
void check_observation(const Observation& obs);

/// Lexicographically smallest candidate (x, then y).
Point multi_point_selector(std::span<const Point> candidates);

/// Gathering rule for the adversarial (N, N-2)-defected model.
Point alg1_destination(const Observation& obs);
/// Gathering rule for the distance-based (4, 2)-defected model.
Point alg2_destination(const Observation& obs);

/// Every destination admitted when the "arbitrary multi point" is left to an
/// adversary; sorted, so front() is what the *_destination functions return.
std::vector<Point> alg1_options(const Observation& obs);
std::vector<Point> alg2_options(const Observation& obs);

DestinationFunction alg1();
DestinationFunction alg2();
/// "alg1" or "alg2"; throws std::invalid_argument otherwise.
DestinationFunction algorithm_by_name(const std::string& name);

}  // namespace gathersim
