#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace gathersim;
using support::P;
using support::Q;
using support::R3;

namespace {

using Kind = TriangleClass::Kind;

std::pair<Point, Point> ordered(const Point& a, const Point& b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

TEST_CASE("squared distance") {
  CHECK(sq_dist(P(0, 0), P(3, 4)) == FieldScalar(25));
  CHECK(sq_dist({Q(1), R3(1)}, {Q(1), R3(1)}) == FieldScalar(0));
  CHECK(sq_dist(P(0, 0), {Q(1), R3(1)}) == FieldScalar(4));
}

TEST_CASE("midpoint and centroid") {
  CHECK(midpoint(P(0, 0), P(4, 0)) == P(2, 0));
  CHECK(midpoint(P(0, 0), P(0, 0)) == P(0, 0));
  CHECK(midpoint({Q(1), R3(1)}, {Q(3), R3(-1)}) == P(2, 0));
  const std::vector<Point> tri{P(0, 0), P(2, 0), {Q(1), R3(1)}};
  CHECK(centroid(tri) == Point{Q(1), R3(1, 3)});
  CHECK(centroid(std::vector<Point>{P(0, 0), P(3, 0), P(0, 3)}) == P(1, 1));
  CHECK(centroid(std::vector<Point>{P(-1, 0), P(1, 0), {Q(0), R3(1)}}) == Point{Q(0), R3(1, 3)});
  CHECK_THROWS_AS(centroid(std::vector<Point>{P(0, 0), P(1, 0)}), GeometryError);
}

TEST_CASE("circumcenter") {
  CHECK(circumcenter(P(0, 0), P(2, 0), P(0, 2)) == P(1, 1));
  CHECK(circumcenter(P(0, 0), P(2, 0), {Q(1), R3(1)}) == Point{Q(1), R3(1, 3)});
  const Point c = circumcenter(P(0, 0), P(4, 0), P(1, 1));
  CHECK(c == support::circumcenter_by_cramer(P(0, 0), P(4, 0), P(1, 1)));
  CHECK(c == Point{Q(2), Q(-1)});
  CHECK(sq_dist(c, P(0, 0)) == sq_dist(c, P(4, 0)));
  CHECK(sq_dist(c, P(0, 0)) == sq_dist(c, P(1, 1)));
  CHECK_THROWS_AS(circumcenter(P(0, 0), P(1, 1), P(3, 3)), CollinearInput);
}

TEST_CASE("circumcenter matches the linear-system oracle on random triples") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 1000) {
    const Point a = support::random_point(rng), b = support::random_point(rng), c = support::random_point(rng);
    if (orientation(a, b, c) == 0) continue;
    ++checked;
    const Point o = circumcenter(a, b, c);
    CHECK(o == support::circumcenter_by_cramer(a, b, c));
    CHECK(sq_dist(o, a) == sq_dist(o, b));
    CHECK(sq_dist(o, a) == sq_dist(o, c));
  }
}

TEST_CASE("smallest enclosing circle examples") {
  CHECK(smallest_enclosing_circle(std::vector<Point>{P(0, 0)}) == Circle{P(0, 0), FieldScalar(0)});
  CHECK(smallest_enclosing_circle(std::vector<Point>{P(0, 0), P(2, 0), P(0, 2), P(1, 1)}) == Circle{P(1, 1), FieldScalar(2)});
  CHECK(smallest_enclosing_circle(std::vector<Point>{P(0, 0), P(4, 0)}) == Circle{P(2, 0), FieldScalar(4)});
  CHECK(smallest_enclosing_circle(std::vector<Point>{P(3, 3), P(3, 3), P(3, 3)}) == Circle{P(3, 3), FieldScalar(0)});
  CHECK_THROWS_AS(smallest_enclosing_circle(std::vector<Point>{}), EmptyInput);
  // obtuse triangle: diametral on the long side
  CHECK(smallest_enclosing_circle(std::vector<Point>{P(0, 0), P(10, 0), P(5, 1)}) == Circle{P(5, 0), FieldScalar(25)});
}

TEST_CASE("smallest enclosing circle equals the brute-force oracle") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> size(1, 6);
    std::vector<Point> pts;
    const int n = size(rng);
    for (int j = 0; j < n; ++j) pts.push_back(support::random_point(rng, 3));
    const Circle c = smallest_enclosing_circle(pts);
    CHECK(c == support::brute_force_sec(pts));
    for (const Point& p : pts) CHECK(circle_contains(c, p));
  }
}

TEST_CASE("orientation") {
  CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == 1);
  CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == -1);
  CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == 0);
  CHECK(orientation(P(0, 0), {Q(1), R3(1)}, {Q(2), R3(2)}) == 0);
}

TEST_CASE("triangle classification") {
  CHECK(classify_triangle(P(0, 0), P(2, 0), {Q(1), R3(1)}).kind == Kind::Equilateral);
  const TriangleClass iso = classify_triangle(P(0, 0), P(4, 0), P(2, 3));
  CHECK(iso.kind == Kind::Isosceles);
  CHECK(iso.side == ordered(P(0, 0), P(4, 0)));
  const TriangleClass sc = classify_triangle(P(0, 0), P(5, 0), P(1, 2));
  CHECK(sc.kind == Kind::ScaleneOrCollinear);
  CHECK(sc.side == ordered(P(0, 0), P(5, 0)));
  const TriangleClass col = classify_triangle(P(0, 0), P(1, 0), P(3, 0));
  CHECK(col.kind == Kind::ScaleneOrCollinear);
  CHECK(col.side == ordered(P(0, 0), P(3, 0)));
  // isosceles with a base longer than the legs
  const TriangleClass flat = classify_triangle(P(0, 0), P(8, 0), P(4, 1));
  CHECK(flat.kind == Kind::Isosceles);
  CHECK(flat.side == ordered(P(0, 0), P(8, 0)));
  // the collinear case with equal halves is isosceles-free: sides 1, 1, 2
  const TriangleClass halves = classify_triangle(P(0, 0), P(1, 0), P(2, 0));
  CHECK(halves.kind == Kind::ScaleneOrCollinear);
  CHECK(halves.side == ordered(P(0, 0), P(2, 0)));
  CHECK_THROWS_AS(classify_triangle(P(0, 0), P(0, 0), P(1, 0)), DuplicatePoints);
}

TEST_CASE("triangle classification is permutation invariant") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Point> t{support::random_point(rng, 2), support::random_point(rng, 2), support::random_point(rng, 2)};
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
    const TriangleClass ref = classify_triangle(t[0], t[1], t[2]);
    std::sort(t.begin(), t.end());
    do {
      const TriangleClass other = classify_triangle(t[0], t[1], t[2]);
      CHECK(other.kind == ref.kind);
      if (ref.kind != Kind::Equilateral) CHECK(other.side == ref.side);
    } while (std::next_permutation(t.begin(), t.end()));
  }
}

TEST_CASE("convex position") {
  CHECK(is_convex_position(std::vector<Point>{P(0, 0), P(1, 0), P(1, 1), P(0, 1)}));
  CHECK_FALSE(is_convex_position(std::vector<Point>{P(0, 0), P(2, 0), {Q(1), R3(1)}, {Q(1), R3(1, 3)}}));
  CHECK(is_convex_position(std::vector<Point>{P(0, 0), P(4, 0), P(5, 1), P(1, 1)}));
  // a point on a side is not in convex position
  CHECK_FALSE(is_convex_position(std::vector<Point>{P(0, 0), P(4, 0), P(2, 0), P(2, 3)}));
  CHECK_THROWS_AS(is_convex_position(std::vector<Point>{P(0, 0), P(0, 0), P(1, 0), P(0, 1)}), DuplicatePoints);
}

TEST_CASE("convex position agrees with the orientation-sign oracle") {
  // four points are in convex position iff no point is in the closed triangle of the others
  std::mt19937_64 rng(24);
  int checked = 0;
  while (checked < 1000) {
    std::vector<Point> pts;
    for (int i = 0; i < 4; ++i) pts.push_back(support::random_point(rng, 3, false));
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && pts[i] != pts[j];
    if (!distinct) continue;
    ++checked;
    bool inside_any = false;
    for (int i = 0; i < 4; ++i) {
      std::vector<Point> o;
      for (int j = 0; j < 4; ++j)
        if (j != i) o.push_back(pts[j]);
      const int s1 = orientation(o[0], o[1], pts[i]), s2 = orientation(o[1], o[2], pts[i]), s3 = orientation(o[2], o[0], pts[i]);
      const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0, has_pos = s1 > 0 || s2 > 0 || s3 > 0;
      if (!(has_neg && has_pos)) inside_any = true;
    }
    CHECK(is_convex_position(pts) == !inside_any);
  }
}

TEST_CASE("longest pairs") {
  CHECK(longest_pairs(std::vector<Point>{P(0, 0), P(1, 0), P(1, 1), P(0, 1)}) == std::vector<IndexPair>{{0, 2}, {1, 3}});
  CHECK(longest_pairs(std::vector<Point>{P(0, 0), P(2, 0), {Q(1), R3(1)}}).size() == 3);
  CHECK(longest_pairs(std::vector<Point>{P(0, 0), P(3, 0), P(4, 2), P(1, 2)}) == std::vector<IndexPair>{{0, 2}});
  CHECK_THROWS(longest_pairs(std::vector<Point>{P(0, 0)}));
}

TEST_CASE("similarity transforms") {
  CHECK(apply_similarity(P(1, 2), SimilarityTransform::rotation_quarter(1)) == P(-2, 1));
  CHECK(apply_similarity(P(1, 2), SimilarityTransform::identity()) == P(1, 2));
  const auto t = SimilarityTransform::scaling(FieldScalar(3)).then(SimilarityTransform::translation(P(0, 1)));
  CHECK(apply_similarity(P(1, 0), t) == P(3, 1));
  CHECK(apply_similarity(P(1, 0), SimilarityTransform::rotation_30(1)) == Point{R3(1, 2), Q(1, 2)});
  CHECK(apply_similarity(P(1, 0), SimilarityTransform::rotation_30(4)) == Point{Q(-1, 2), R3(1, 2)});
  CHECK(apply_similarity(P(1, 2), SimilarityTransform::reflect_x_axis()) == P(1, -2));
  CHECK(apply_similarity(P(1, 2), SimilarityTransform::reflect_y_axis()) == P(-1, 2));
  for (int k = 0; k < 12; ++k) {
    const Point p = apply_similarity(P(2, 0), SimilarityTransform::rotation_30(k));
    CHECK(sq_dist(p, P(0, 0)) == FieldScalar(4));
  }
  CHECK(apply_similarity(P(5, 7), SimilarityTransform::rotation_30(12)) == P(5, 7));
}

TEST_CASE("geometry is similarity equivariant") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 200; ++i) {
    std::vector<Point> pts;
    for (int j = 0; j < 4; ++j) pts.push_back(support::random_point(rng, 3));
    for (const auto& t : support::sample_transforms(rng)) {
      std::vector<Point> moved;
      for (const Point& p : pts) moved.push_back(t.apply(p));
      CHECK(midpoint(moved[0], moved[1]) == t.apply(midpoint(pts[0], pts[1])));
      CHECK(smallest_enclosing_circle(moved).center == t.apply(smallest_enclosing_circle(pts).center));
      CHECK(smallest_enclosing_circle(moved).sq_radius == smallest_enclosing_circle(pts).sq_radius * t.sq_scale());
      if (orientation(pts[0], pts[1], pts[2]) != 0) {
        const std::vector<Point> tri(pts.begin(), pts.begin() + 3), mtri(moved.begin(), moved.begin() + 3);
        CHECK(centroid(mtri) == t.apply(centroid(tri)));
        CHECK(circumcenter(moved[0], moved[1], moved[2]) == t.apply(circumcenter(pts[0], pts[1], pts[2])));
        CHECK(classify_triangle(moved[0], moved[1], moved[2]).kind == classify_triangle(pts[0], pts[1], pts[2]).kind);
      }
    }
  }
}

TEST_CASE("enclosing circle structure") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 300; ++i) {
    std::vector<Point> pts;
    for (int j = 0; j < 6; ++j) pts.push_back(support::random_point(rng, 3));
    const Circle c = smallest_enclosing_circle(pts);
    // interior points can be dropped
    std::vector<Point> boundary;
    for (const Point& p : pts)
      if (sq_dist(p, c.center) == c.sq_radius) boundary.push_back(p);
    CHECK(smallest_enclosing_circle(boundary) == c);
    // a diametral pair or an acute-or-right boundary triple determines it
    bool determined = false;
    for (std::size_t a = 0; a < boundary.size(); ++a) {
      for (std::size_t b = a + 1; b < boundary.size(); ++b) {
        if (support::diametral(boundary[a], boundary[b]) == c) determined = true;
        for (std::size_t d = b + 1; d < boundary.size(); ++d) {
          if (orientation(boundary[a], boundary[b], boundary[d]) == 0) continue;
          if (support::brute_force_sec({boundary[a], boundary[b], boundary[d]}) == c) determined = true;
        }
      }
    }
    CHECK((determined || c.sq_radius.is_zero()));
  }
}
