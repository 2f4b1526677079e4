#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gathersim/field.hpp"

namespace gathersim {

struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CollinearInput : GeometryError {
  using GeometryError::GeometryError;
};
struct EmptyInput : GeometryError {
  using GeometryError::GeometryError;
};
struct DuplicatePoints : GeometryError {
  using GeometryError::GeometryError;
};

struct Point {
  FieldScalar x;
  FieldScalar y;

  Point() = default;
  Point(FieldScalar px, FieldScalar py) : x(std::move(px)), y(std::move(py)) {}

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic by value: x, then y.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  Point& operator+=(const Point& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Point& operator-=(const Point& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const FieldScalar& s, const Point& p) { return {s * p.x, s * p.y}; }

  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
  std::size_t hash() const;

  static bool structural_less(const Point& a, const Point& b);
};

struct PointHash {
  std::size_t operator()(const Point& p) const { return p.hash(); }
};

struct Circle {
  Point center;
  FieldScalar sq_radius;
  friend bool operator==(const Circle&, const Circle&) = default;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

struct TriangleClass {
  enum class Kind { Equilateral, Isosceles, ScaleneOrCollinear };
  Kind kind = Kind::Equilateral;
  /// Base side for Isosceles, unique longest side for ScaleneOrCollinear.
  /// Endpoints are stored in lexicographic order. Unused for Equilateral.
  std::pair<Point, Point> side;
};

FieldScalar sq_dist(const Point& p, const Point& q);
Point midpoint(const Point& p, const Point& q);

/// Coordinate average of exactly three points. For an equilateral triangle
/// this is also the incenter and circumcenter.
Point centroid(std::span<const Point> pts);

/// Sign of the cross product (b - a) x (c - a): +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// Throws CollinearInput when a, b, c are collinear.
Point circumcenter(const Point& a, const Point& b, const Point& c);

/// Minimal enclosing circle; duplicates allowed. Throws EmptyInput.
Circle smallest_enclosing_circle(std::span<const Point> pts);

bool circle_contains(const Circle& c, const Point& p);

TriangleClass classify_triangle(const Point& a, const Point& b, const Point& c);

/// True iff no one of the four points lies inside or on the triangle of the
/// other three. Throws DuplicatePoints.
bool is_convex_position(std::span<const Point> pts);

/// All index pairs (i < j) at maximum squared distance, in lexicographic order.
std::vector<IndexPair> longest_pairs(std::span<const Point> pts);

/// p -> M(p) + t where M is a field-valued rotation-scale, optionally
/// preceded by the reflection (x, y) -> (x, -y).
class SimilarityTransform {
 public:
  static SimilarityTransform identity();
  static SimilarityTransform translation(const Point& v);
  static SimilarityTransform scaling(const FieldScalar& s);
  /// Rotation by quarter_turns * 90 degrees counter-clockwise about the origin.
  static SimilarityTransform rotation_quarter(int quarter_turns);
  /// Rotation by steps * 30 degrees counter-clockwise; requires radicand 3.
  static SimilarityTransform rotation_30(int steps);
  /// Rotation with the given (cos, sin) pair, which must have unit norm.
  static SimilarityTransform rotation(const FieldScalar& cos, const FieldScalar& sin);
  static SimilarityTransform reflect_x_axis();
  static SimilarityTransform reflect_y_axis();

  Point apply(const Point& p) const;
  /// Transform applied after *this.
  SimilarityTransform then(const SimilarityTransform& next) const;
  /// Squared linear scale factor.
  FieldScalar sq_scale() const { return a_ * a_ + b_ * b_; }
  bool reflects() const { return reflect_; }

 private:
  SimilarityTransform(FieldScalar a, FieldScalar b, bool reflect, Point t)
      : a_(std::move(a)), b_(std::move(b)), reflect_(reflect), t_(std::move(t)) {}
  FieldScalar a_{1};
  FieldScalar b_{0};
  bool reflect_ = false;
  Point t_;
};

Point apply_similarity(const Point& p, const SimilarityTransform& t);

}  // namespace gathersim

template <>
struct std::hash<gathersim::Point> {
  std::size_t operator()(const gathersim::Point& p) const { return p.hash(); }
};
