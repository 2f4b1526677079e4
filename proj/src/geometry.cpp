#include "gathersim/geometry.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace gathersim {

std::size_t Point::hash() const {
  std::size_t h = x.hash();
  return h ^ (y.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool Point::structural_less(const Point& a, const Point& b) {
  if (FieldScalar::structural_less(a.x, b.x)) return true;
  if (FieldScalar::structural_less(b.x, a.x)) return false;
  return FieldScalar::structural_less(a.y, b.y);
}

FieldScalar sq_dist(const Point& p, const Point& q) {
  FieldScalar dx = p.x - q.x;
  FieldScalar dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Point midpoint(const Point& p, const Point& q) {
  const FieldScalar half(Rational(1, 2));
  return {(p.x + q.x) * half, (p.y + q.y) * half};
}

Point centroid(std::span<const Point> pts) {
  if (pts.size() < 3) throw GeometryError("centroid needs three points");
  if (pts.size() > 3) throw GeometryError("centroid is defined here for triangles only");
  const FieldScalar third(Rational(1, 3));
  return {(pts[0].x + pts[1].x + pts[2].x) * third, (pts[0].y + pts[1].y + pts[2].y) * third};
}

int orientation(const Point& a, const Point& b, const Point& c) {
  FieldScalar cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.sign();
}

Point circumcenter(const Point& a, const Point& b, const Point& c) {
  const Point u = b - a;
  const Point v = c - a;
  FieldScalar det = u.x * v.y - u.y * v.x;
  if (det.is_zero()) throw CollinearInput("circumcenter of collinear points");
  det *= FieldScalar(2);
  const FieldScalar uu = u.x * u.x + u.y * u.y;
  const FieldScalar vv = v.x * v.x + v.y * v.y;
  FieldScalar cx = (v.y * uu - u.y * vv) / det;
  FieldScalar cy = (u.x * vv - v.x * uu) / det;
  return {a.x + cx, a.y + cy};
}

bool circle_contains(const Circle& c, const Point& p) { return sq_dist(c.center, p) <= c.sq_radius; }

namespace {

Circle diametral(const Point& p, const Point& q) {
  Point m = midpoint(p, q);
  FieldScalar r = sq_dist(m, p);
  return {std::move(m), std::move(r)};
}

Circle circumcircle(const Point& a, const Point& b, const Point& c) {
  Point o = circumcenter(a, b, c);
  FieldScalar r = sq_dist(o, a);
  return {std::move(o), std::move(r)};
}

}  // namespace

// Incremental construction with the boundary-constrained restarts; without
// shuffling it is cubic in the worst case, which is irrelevant at these sizes.
Circle smallest_enclosing_circle(std::span<const Point> pts) {
  if (pts.empty()) throw EmptyInput("smallest_enclosing_circle of no points");
  Circle c{pts[0], FieldScalar{}};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (circle_contains(c, pts[i])) continue;
    c = Circle{pts[i], FieldScalar{}};
    for (std::size_t j = 0; j < i; ++j) {
      if (circle_contains(c, pts[j])) continue;
      c = diametral(pts[i], pts[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (circle_contains(c, pts[k])) continue;
        c = circumcircle(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

TriangleClass classify_triangle(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c) throw DuplicatePoints("classify_triangle needs distinct points");
  const std::array<const Point*, 3> v{&a, &b, &c};
  // side[i] is opposite vertex i
  const std::array<FieldScalar, 3> side{sq_dist(b, c), sq_dist(a, c), sq_dist(a, b)};
  auto endpoints = [&](std::size_t opposite) {
    const Point& p = *v[(opposite + 1) % 3];
    const Point& q = *v[(opposite + 2) % 3];
    return p < q ? std::pair{p, q} : std::pair{q, p};
  };

  TriangleClass out;
  if (side[0] == side[1] && side[1] == side[2]) {
    out.kind = TriangleClass::Kind::Equilateral;
    return out;
  }
  const bool collinear = orientation(a, b, c) == 0;
  if (!collinear) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (side[(i + 1) % 3] == side[(i + 2) % 3]) {
        out.kind = TriangleClass::Kind::Isosceles;
        out.side = endpoints(i);
        return out;
      }
    }
  }
  std::size_t longest = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (side[i] > side[longest]) longest = i;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    // two equal longest sides would have been reported as isosceles (or the
    // points would coincide, for collinear input)
    assert(i == longest || side[i] != side[longest]);
  }
  out.kind = TriangleClass::Kind::ScaleneOrCollinear;
  out.side = endpoints(longest);
  return out;
}

bool is_convex_position(std::span<const Point> pts) {
  if (pts.size() != 4) throw GeometryError("is_convex_position expects four points");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (pts[i] == pts[j]) throw DuplicatePoints("is_convex_position needs distinct points");
    }
  }
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::array<const Point*, 3> t{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != skip) t[n++] = &pts[i];
    }
    const Point& p = pts[skip];
    const int o = orientation(*t[0], *t[1], *t[2]);
    const int s0 = orientation(*t[0], *t[1], p);
    const int s1 = orientation(*t[1], *t[2], p);
    const int s2 = orientation(*t[2], *t[0], p);
    if (o == 0) {
      // degenerate triangle: p inside or on it iff p lies on the hull segment
      if (s0 == 0 && s1 == 0 && s2 == 0) {
        const Point& lo = std::min({*t[0], *t[1], *t[2]});
        const Point& hi = std::max({*t[0], *t[1], *t[2]});
        if (lo <= p && p <= hi) return false;
      }
      continue;
    }
    // closed triangle test: no edge puts p strictly on the outer side
    if (s0 * o >= 0 && s1 * o >= 0 && s2 * o >= 0) return false;
  }
  return true;
}

std::vector<IndexPair> longest_pairs(std::span<const Point> pts) {
  if (pts.size() < 2) throw GeometryError("longest_pairs needs at least two points");
  std::vector<IndexPair> out;
  FieldScalar best;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      FieldScalar d = sq_dist(pts[i], pts[j]);
      if (out.empty() || d > best) {
        best = std::move(d);
        out.assign(1, {i, j});
      } else if (d == best) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

SimilarityTransform SimilarityTransform::identity() { return {FieldScalar(1), FieldScalar(0), false, {}}; }

SimilarityTransform SimilarityTransform::translation(const Point& v) {
  return {FieldScalar(1), FieldScalar(0), false, v};
}

SimilarityTransform SimilarityTransform::scaling(const FieldScalar& s) {
  if (s.is_zero()) throw GeometryError("similarity scale must be nonzero");
  return {s, FieldScalar(0), false, {}};
}

SimilarityTransform SimilarityTransform::rotation_quarter(int quarter_turns) {
  static const std::array<std::pair<int, int>, 4> cs{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  const auto [c, s] = cs[static_cast<std::size_t>(((quarter_turns % 4) + 4) % 4)];
  return {FieldScalar(c), FieldScalar(s), false, {}};
}

SimilarityTransform SimilarityTransform::rotation_30(int steps) {
  if (radicand() != 3) throw GeometryError("30-degree rotations need the field Q(sqrt 3)");
  const int k = ((steps % 12) + 12) % 12;
  const FieldScalar half(Rational(1, 2));
  const FieldScalar root_half(Rational(0), Rational(1, 2));
  // (cos, sin) at 0, 30, 60 and 90 degrees; other angles by quadrant
  const std::array<std::pair<FieldScalar, FieldScalar>, 3> base{
      {{FieldScalar(1), FieldScalar(0)}, {root_half, half}, {half, root_half}}};
  auto [c, s] = base[static_cast<std::size_t>(k % 3)];
  for (int q = 0; q < k / 3; ++q) {
    // rotate by a further 90 degrees: (c, s) -> (-s, c)
    FieldScalar nc = -s;
    s = c;
    c = std::move(nc);
  }
  return {c, s, false, {}};
}

SimilarityTransform SimilarityTransform::rotation(const FieldScalar& cos, const FieldScalar& sin) {
  if (cos * cos + sin * sin != FieldScalar(1)) throw GeometryError("rotation needs cos^2 + sin^2 = 1");
  return {cos, sin, false, {}};
}

SimilarityTransform SimilarityTransform::reflect_x_axis() {
  return {FieldScalar(1), FieldScalar(0), true, {}};
}

SimilarityTransform SimilarityTransform::reflect_y_axis() {
  // (x, y) -> (-x, y) is the x-axis reflection followed by a half turn
  return {FieldScalar(-1), FieldScalar(0), true, {}};
}

Point SimilarityTransform::apply(const Point& p) const {
  const FieldScalar qy = reflect_ ? -p.y : p.y;
  return {a_ * p.x - b_ * qy + t_.x, b_ * p.x + a_ * qy + t_.y};
}

SimilarityTransform SimilarityTransform::then(const SimilarityTransform& next) const {
  // next.M * next.R * (M * R * p + t) + next.t; a reflection conjugates the
  // rotation it passes through.
  const FieldScalar b = next.reflect_ ? -b_ : b_;
  FieldScalar na = next.a_ * a_ - next.b_ * b;
  FieldScalar nb = next.a_ * b + next.b_ * a_;
  return {std::move(na), std::move(nb), reflect_ != next.reflect_, next.apply(t_)};
}

Point apply_similarity(const Point& p, const SimilarityTransform& t) { return t.apply(p); }

}  // namespace gathersim
