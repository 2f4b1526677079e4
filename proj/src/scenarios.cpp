#include "gathersim/scenarios.hpp"

#include <algorithm>
#include <stdexcept>

#include "gathersim/algorithms.hpp"
#include "gathersim/configs.hpp"

namespace gathersim {

Trace scenario_alg1_n4_cycle(int rounds) {
  const Configuration start = named_config("n4-equilateral-center");
  const DefectPolicy policy{Model::Adversarial, 2, TieBreak::LowestId};
  const Trace trace = run(start, alg1(), policy, cycling_strategy(), rounds, {CycleMode::Record});
  const SimilaritySignature sig = similarity_signature(start);
  for (const RoundRecord& rec : trace.rounds) {
    if (similarity_signature(rec.before) != sig || !are_similar(rec.before, start)) {
      throw std::runtime_error("no self-similar successor at round " + std::to_string(rec.before.round));
    }
  }
  if (static_cast<int>(trace.rounds.size()) != rounds || !are_similar(trace.final_config, start)) {
    throw std::runtime_error("the equilateral-plus-center cycle could not be continued");
  }
  return trace;
}

namespace {

struct Frame {
  Point origin;
  Point ex;
  Point ey;

  Point to_local(const Point& q) const {
    const Point v = q - origin;
    return {v.x * ex.x + v.y * ex.y, v.x * ey.x + v.y * ey.y};
  }
  Point to_global(const Point& l) const { return origin + l.x * ex + l.y * ey; }
};

Frame frame_for(const Point& p, const Point& center, Chirality chirality) {
  const Point dir = center - p;
  const auto len = field_sqrt(sq_dist(p, center));
  if (!len) throw std::logic_error("frame length left the field");
  const Point ex{dir.x / *len, dir.y / *len};
  const Point ccw{-ex.y, ex.x};
  return {p, ex, chirality == Chirality::A ? ccw : Point{-ccw.x, -ccw.y}};
}

bool same_multiset(std::vector<Point> a, std::vector<Point> b) {
  std::sort(a.begin(), a.end(), Point::structural_less);
  std::sort(b.begin(), b.end(), Point::structural_less);
  return a == b;
}

}  // namespace

Tri31Report scenario_tri31(const LocalFrameRule& rule) {
  if (rule.scale.sign() < 0) throw std::invalid_argument("scale must be non-negative");
  Tri31Report report;
  report.rule = rule;
  report.start = named_config("equilateral");
  const auto& p = report.start.positions;
  const Point center = centroid(p);
  const auto turn = SimilarityTransform::rotation_30(-rule.angle_steps);
  const auto c3 = SimilarityTransform::translation(Point{-center.x, -center.y})
                      .then(SimilarityTransform::rotation_30(4))
                      .then(SimilarityTransform::translation(center));

  report.views_identical = true;
  for (int side = 0; side < 2; ++side) {
    Tri31Outcome& out = report.outcomes[static_cast<std::size_t>(side)];
    out.chirality = side == 0 ? Chirality::A : Chirality::B;
    std::vector<Point> views;
    for (std::size_t i = 0; i < 3; ++i) {
      const Frame f = frame_for(p[i], center, out.chirality);
      const Point seen = f.to_local(p[(i + 1) % 3]);
      views.push_back(seen);
      out.successor.positions.push_back(f.to_global(rule.scale * turn.apply(seen)));
    }
    out.successor.round = 1;
    report.views_identical = report.views_identical && std::all_of(views.begin(), views.end(), [&](const Point& v) {
                               return v == views.front();
                             });
    out.gathered = is_gathered(out.successor);
    std::vector<Point> rotated;
    for (const Point& q : out.successor.positions) rotated.push_back(c3.apply(q));
    out.c3_symmetric = same_multiset(rotated, out.successor.positions);
  }
  return report;
}

Strategy relaxed_two_group_strategy() {
  return [](const Configuration& c, const DestinationFunction&, const DefectPolicy& policy) {
    RoundChoice choice;
    for (RobotId r = 0; r < c.size(); ++r) {
      const std::size_t m = observed_count(c, r, policy);
      IdSet remote;
      IdSet local;
      for (RobotId o : eligible_robots(c, r, policy)) {
        (c.positions[o] == c.positions[r] ? local : remote).push_back(o);
      }
      IdSet chosen(remote.begin(), remote.begin() + static_cast<std::ptrdiff_t>(std::min(m, remote.size())));
      for (std::size_t i = 0; chosen.size() < m && i < local.size(); ++i) chosen.push_back(local[i]);
      std::sort(chosen.begin(), chosen.end());
      choice.observed.push_back(std::move(chosen));
      choice.option.push_back(0);
    }
    return choice;
  };
}

RelaxedReport scenario_relaxed(std::size_t n, int rounds) {
  if (n < 4) throw std::invalid_argument("relaxed scenario needs N >= 4");
  const Configuration start = two_point_config(2, n - 2, Point{0, 0}, Point{8, 0});
  const DefectPolicy policy{Model::RelaxedAdversarial, static_cast<int>(n) - 2, TieBreak::LowestId};
  RelaxedReport report;
  report.trace = run(start, alg1(), policy, relaxed_two_group_strategy(), rounds, {CycleMode::Record});

  std::vector<Configuration> configs;
  for (const RoundRecord& rec : report.trace.rounds) configs.push_back(rec.before);
  configs.push_back(report.trace.final_config);

  report.two_points_every_round = true;
  report.never_gathered = true;
  for (const Configuration& c : configs) {
    const auto occ = occupied_points(c);
    report.never_gathered = report.never_gathered && !is_gathered(c);
    report.two_points_every_round = report.two_points_every_round && occ.size() == 2;
    if (occ.size() == 2) report.sq_distances.push_back(sq_dist(occ[0].point, occ[1].point));
  }
  const bool complete = static_cast<int>(configs.size()) == rounds + 1 && report.two_points_every_round;

  report.period_two = complete && n == 4;
  for (std::size_t t = 0; report.period_two && t + 2 < configs.size(); ++t) {
    report.period_two = configs[t].positions == configs[t + 2].positions &&
                        configs[t].positions != configs[t + 1].positions;
  }
  report.quarter_decay = complete && n >= 5;
  FieldScalar expected = complete ? report.sq_distances.front() : FieldScalar(0);
  for (std::size_t t = 1; report.quarter_decay && t < report.sq_distances.size(); ++t) {
    expected = expected / FieldScalar(4);
    report.quarter_decay = report.sq_distances[t] == expected;
  }
  return report;
}

}  // namespace gathersim
