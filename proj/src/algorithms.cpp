#include "gathersim/algorithms.hpp"

#include <algorithm>

namespace gathersim {

namespace {

std::vector<Point> opset_points(const Observation& obs) {
  std::vector<Point> pts;
  pts.reserve(obs.opset.size());
  for (const auto& e : obs.opset) pts.push_back(e.point);
  return pts;
}

Point sec_center(const Observation& obs) { return smallest_enclosing_circle(opset_points(obs)).center; }

std::vector<Point> multi_points(const Observation& obs) {
  std::vector<Point> out;
  for (const auto& e : obs.opset) {
    if (e.multi && e.point != obs.self_point) out.push_back(e.point);
  }
  return out;
}

// Rules 1-3 on the observed triangle (or a degenerate two-point view).
Point triangle_rule(const Observation& obs) {
  const auto pts = opset_points(obs);
  if (pts.size() == 1) return pts[0];
  if (pts.size() == 2) return midpoint(pts[0], pts[1]);
  const TriangleClass tc = classify_triangle(pts[0], pts[1], pts[2]);
  if (tc.kind == TriangleClass::Kind::Equilateral) return centroid(pts);
  return midpoint(tc.side.first, tc.side.second);
}

}  // namespace

void check_observation(const Observation& obs) {
  if (obs.opset.empty()) throw MalformedObservation("empty opset");
  for (std::size_t i = 1; i < obs.opset.size(); ++i) {
    if (!(obs.opset[i - 1].point < obs.opset[i].point)) {
      throw MalformedObservation("opset must be strictly sorted");
    }
  }
  std::size_t self_entries = 0;
  for (const auto& e : obs.opset) {
    if (e.point != obs.self_point) continue;
    ++self_entries;
    if (e.multi != obs.self_accompanied) {
      throw MalformedObservation("self entry multiplicity disagrees with self_accompanied");
    }
  }
  if (self_entries != 1) throw MalformedObservation("self point must appear exactly once");
}

DecisionCase decision_case(const Observation& obs) {
  check_observation(obs);
  const bool all_multi = std::all_of(obs.opset.begin(), obs.opset.end(), [](const auto& e) { return e.multi; });
  const bool any_multi = std::any_of(obs.opset.begin(), obs.opset.end(), [](const auto& e) { return e.multi; });
  if (all_multi) return DecisionCase::AllMulti;
  if (!obs.self_accompanied && any_multi) return DecisionCase::SingleSeesMulti;
  if (!any_multi) return DecisionCase::NoMulti;
  return DecisionCase::AccompaniedStays;
}

Point multi_point_selector(std::span<const Point> candidates) {
  if (candidates.empty()) throw std::invalid_argument("multi_point_selector needs a candidate");
  return *std::min_element(candidates.begin(), candidates.end());
}

std::vector<Point> alg1_options(const Observation& obs) {
  switch (decision_case(obs)) {
    case DecisionCase::AllMulti:
    case DecisionCase::NoMulti:
      return {sec_center(obs)};
    case DecisionCase::SingleSeesMulti:
      return multi_points(obs);
    case DecisionCase::AccompaniedStays:
      return {obs.self_point};
  }
  throw std::logic_error("unreachable decision case");
}

std::vector<Point> alg2_options(const Observation& obs) {
  const DecisionCase dc = decision_case(obs);
  if (obs.opset.size() > 3) throw MalformedObservation("alg2 expects at most three observed points");
  if (dc == DecisionCase::NoMulti) return {triangle_rule(obs)};
  return alg1_options(obs);
}

Point alg1_destination(const Observation& obs) {
  const auto opts = alg1_options(obs);
  return multi_point_selector(opts);
}

Point alg2_destination(const Observation& obs) {
  const auto opts = alg2_options(obs);
  return multi_point_selector(opts);
}

DestinationFunction alg1() { return {"alg1", alg1_options}; }
DestinationFunction alg2() { return {"alg2", alg2_options}; }

DestinationFunction algorithm_by_name(const std::string& name) {
  if (name == "alg1") return alg1();
  if (name == "alg2") return alg2();
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

}  // namespace gathersim
