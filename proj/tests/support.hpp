#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "gathersim/engine.hpp"
#include "gathersim/geometry.hpp"

namespace support {

using namespace gathersim;

inline FieldScalar Q(long num, long den = 1) { return FieldScalar(Rational(num, den)); }
inline FieldScalar R3(long num, long den = 1) { return FieldScalar(Rational(0), Rational(num, den)); }
inline FieldScalar F(long a, long b) { return FieldScalar(Rational(a), Rational(b)); }
inline Point P(long x, long y) { return {FieldScalar(x), FieldScalar(y)}; }

inline FieldScalar random_scalar(std::mt19937_64& rng, int span = 4, bool irrational = true) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> coin(0, 2);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  Rational s(0);
  if (irrational && coin(rng) == 0) {
    s = Rational(num(rng), den(rng));
    s.canonicalize();
  }
  return {r, s};
}

inline Point random_point(std::mt19937_64& rng, int span = 4, bool irrational = true) {
  return {random_scalar(rng, span, irrational), random_scalar(rng, span, irrational)};
}

// Circle through a, b with ab as diameter.
inline Circle diametral(const Point& a, const Point& b) {
  const Point c = midpoint(a, b);
  return {c, sq_dist(c, a)};
}

// Oracle: circumcenter from the two perpendicular-bisector equations,
//   2(b-a).X = |b|^2 - |a|^2,  2(c-a).X = |c|^2 - |a|^2, by Cramer's rule.
inline Point circumcenter_by_cramer(const Point& a, const Point& b, const Point& c) {
  const FieldScalar a11 = FieldScalar(2) * (b.x - a.x), a12 = FieldScalar(2) * (b.y - a.y);
  const FieldScalar a21 = FieldScalar(2) * (c.x - a.x), a22 = FieldScalar(2) * (c.y - a.y);
  const FieldScalar na = a.x * a.x + a.y * a.y;
  const FieldScalar r1 = b.x * b.x + b.y * b.y - na;
  const FieldScalar r2 = c.x * c.x + c.y * c.y - na;
  const FieldScalar det = a11 * a22 - a12 * a21;
  return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
}

// Oracle: minimum over every single-point, pair-diameter and non-collinear
// triple-circumcircle candidate that contains all points.
inline Circle brute_force_sec(const std::vector<Point>& pts) {
  std::vector<Circle> candidates;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    candidates.push_back({pts[i], FieldScalar(0)});
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      candidates.push_back(diametral(pts[i], pts[j]));
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (orientation(pts[i], pts[j], pts[k]) == 0) continue;
        const Point c = circumcenter_by_cramer(pts[i], pts[j], pts[k]);
        candidates.push_back({c, sq_dist(c, pts[i])});
      }
    }
  }
  std::optional<Circle> best;
  for (const Circle& c : candidates) {
    const bool covers = std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return sq_dist(p, c.center) <= c.sq_radius; });
    if (covers && (!best || c.sq_radius < best->sq_radius)) best = c;
  }
  return *best;
}

inline Observation make_obs(const Point& self, bool accompanied, std::vector<ObservedPoint> remote) {
  Observation obs;
  obs.self_point = self;
  obs.self_accompanied = accompanied;
  remote.push_back({self, accompanied});
  std::sort(remote.begin(), remote.end(), [](const ObservedPoint& a, const ObservedPoint& b) { return a.point < b.point; });
  obs.opset = std::move(remote);
  return obs;
}

inline std::vector<SimilarityTransform> sample_transforms(std::mt19937_64& rng, bool with_30 = true) {
  std::vector<SimilarityTransform> out;
  std::uniform_int_distribution<int> q(0, 3);
  std::uniform_int_distribution<int> steps(0, 11);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < 6; ++i) {
    SimilarityTransform t = SimilarityTransform::rotation_quarter(q(rng));
    if (with_30 && coin(rng)) t = t.then(SimilarityTransform::rotation_30(steps(rng)));
    if (coin(rng)) t = t.then(SimilarityTransform::reflect_x_axis());
    FieldScalar s = random_scalar(rng, 3);
    if (s.is_zero()) s = FieldScalar(2);
    t = t.then(SimilarityTransform::scaling(s)).then(SimilarityTransform::translation(random_point(rng, 5)));
    out.push_back(t);
  }
  return out;
}

inline Configuration transform(const Configuration& c, const SimilarityTransform& t) {
  Configuration out = c;
  for (Point& p : out.positions) p = t.apply(p);
  return out;
}

}  // namespace support
