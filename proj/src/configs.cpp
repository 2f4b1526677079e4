#include "gathersim/configs.hpp"

#include <algorithm>
#include <stdexcept>

namespace gathersim {

namespace {

FieldScalar q(long num, long den = 1) { return FieldScalar(Rational(num, den)); }
FieldScalar root3(long num, long den = 1) { return FieldScalar(Rational(0), Rational(num, den)); }

Point ip(long x, long y) { return {FieldScalar(x), FieldScalar(y)}; }

void require_root3(const std::string& name) {
  if (radicand() != 3) throw std::invalid_argument("named config '" + name + "' needs radicand 3");
}

bool generic(const std::vector<Point>& pts) {
  std::vector<FieldScalar> d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) return false;
      d.push_back(sq_dist(pts[i], pts[j]));
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (orientation(pts[i], pts[j], pts[k]) == 0) return false;
      }
    }
  }
  std::sort(d.begin(), d.end(), FieldScalar::structural_less);
  return std::adjacent_find(d.begin(), d.end()) == d.end();
}

Configuration from_points(std::vector<Point> pts) { return Configuration{std::move(pts), 0}; }

const std::vector<Point>& circle25() {
  static const std::vector<Point> pts{ip(5, 0),  ip(4, 3),   ip(3, 4),   ip(0, 5),   ip(-3, 4), ip(-4, 3),
                                      ip(-5, 0), ip(-4, -3), ip(-3, -4), ip(0, -5),  ip(3, -4), ip(4, -3)};
  return pts;
}

}  // namespace

Configuration two_point_config(std::size_t a, std::size_t b, const Point& p, const Point& q2) {
  Configuration c;
  c.positions.assign(a, p);
  c.positions.insert(c.positions.end(), b, q2);
  return c;
}

std::vector<std::string> named_config_names() {
  return {"figure1-eight-robots", "n4-equilateral-center", "square", "parallelogram-unique-diagonal",
          "three-longest", "four-longest", "equilateral", "two-point:A,B"};
}

Configuration named_config(const std::string& name) {
  if (name == "equilateral") {
    require_root3(name);
    return from_points({ip(0, 0), ip(2, 0), {q(1), root3(1)}});
  }
  if (name == "n4-equilateral-center") {
    require_root3(name);
    return from_points({ip(0, 0), ip(2, 0), {q(1), root3(1)}, {q(1), root3(1, 3)}});
  }
  if (name == "square") return from_points({ip(0, 0), ip(1, 0), ip(1, 1), ip(0, 1)});
  if (name == "parallelogram-unique-diagonal") return from_points({ip(0, 0), ip(4, 0), ip(5, 3), ip(1, 3)});
  if (name == "three-longest") {
    // |r1r2| = |r1r3| = |r2r4| = 2; the other three pairs are shorter
    require_root3(name);
    return from_points({ip(0, 0), ip(2, 0), {q(6, 5), q(8, 5)}, {q(2) - root3(1), q(1)}});
  }
  if (name == "four-longest") {
    // equilateral r1 r2 r3 of side 2 plus r4 at distance 2 from the apex r2
    require_root3(name);
    return from_points({ip(0, 0), {q(1), root3(1)}, ip(2, 0), {q(1), root3(1) - q(2)}});
  }
  if (name == "figure1-eight-robots") {
    // r1 r2 at p1, r3 at p3, r4 r5 r6 at p4, r7 at p7, r8 at p8. From p4 the
    // nearest robot is r3 and r1 r2 r7 r8 tie at distance 5; from p7 the
    // nearest is r8, then the trio at p4.
    const Point p1 = ip(0, -5), p3 = ip(-1, 0), p4 = ip(0, 0), p7 = ip(3, 4), p8 = ip(4, 3);
    return from_points({p1, p1, p3, p4, p4, p4, p7, p8});
  }
  if (name.rfind("two-point:", 0) == 0) {
    const std::string args = name.substr(10);
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("two-point needs 'two-point:A,B'");
    const long a = std::stol(args.substr(0, comma));
    const long b = std::stol(args.substr(comma + 1));
    if (a < 1 || b < 1) throw std::invalid_argument("two-point counts must be positive");
    return two_point_config(static_cast<std::size_t>(a), static_cast<std::size_t>(b), ip(0, 0), ip(8, 0));
  }
  throw std::invalid_argument("unknown named config '" + name + "'");
}

Configuration random_generic_config(std::size_t n, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> coord(-range, range);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(ip(coord(rng), coord(rng)));
    if (generic(pts)) return from_points(std::move(pts));
  }
  throw std::runtime_error("could not sample a generic configuration");
}

Configuration random_cocircular_config(std::size_t n, std::mt19937_64& rng) {
  if (n < 3 || n > circle25().size()) throw std::invalid_argument("cocircular config needs 3..12 robots");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Point> pool = circle25();
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    if (smallest_enclosing_circle(pool).center == ip(0, 0)) return from_points(std::move(pool));
  }
  throw std::runtime_error("could not sample a cocircular configuration");
}

Configuration random_grouped_config(const std::vector<std::size_t>& counts, std::size_t singles,
                                    std::mt19937_64& rng, int range) {
  Configuration base = random_generic_config(counts.size() + singles, rng, range);
  Configuration out;
  for (std::size_t g = 0; g < base.size(); ++g) {
    const std::size_t times = g < counts.size() ? counts[g] : 1;
    out.positions.insert(out.positions.end(), times, base.positions[g]);
  }
  return out;
}

std::vector<NamedInstance> theorem_3_6_suite(std::size_t n) {
  if (n < 5) throw std::invalid_argument("theorem suite needs N >= 5");
  std::vector<NamedInstance> out;
  auto add = [&](std::string name, Configuration c) { out.push_back({std::move(name), std::move(c)}); };
  std::mt19937_64 rng(0x3600 + n);

  for (int i = 0; i < 6; ++i) add("generic-single-" + std::to_string(i), random_generic_config(n, rng));
  for (int i = 0; i < 4; ++i) add("one-pair-" + std::to_string(i), random_grouped_config({2}, n - 2, rng));
  for (int i = 0; i < 3; ++i) add("two-pairs-" + std::to_string(i), random_grouped_config({2, 2}, n - 4, rng));
  for (int i = 0; i < 3; ++i) add("triple-" + std::to_string(i), random_grouped_config({3}, n - 3, rng));

  {
    std::vector<Point> line;
    const long xs[] = {0, 1, 3, 7, 12, 18, 25};
    for (std::size_t i = 0; i < n; ++i) line.push_back(ip(xs[i % 7] + 30 * static_cast<long>(i / 7), 0));
    add("collinear-single", from_points(line));
    std::vector<Point> slanted;
    for (std::size_t i = 0; i < n; ++i) slanted.push_back(ip(2 * static_cast<long>(i * i), static_cast<long>(i * i)));
    add("collinear-slanted", from_points(slanted));
    std::vector<Point> grouped(line.begin(), line.end());
    grouped[1] = grouped[0];
    add("collinear-pair", from_points(grouped));
  }
  for (int i = 0; i < 3; ++i) add("cocircular-" + std::to_string(i), random_cocircular_config(n, rng));
  return out;
}

std::vector<NamedInstance> lemma_3_2_instances(std::size_t n) {
  std::vector<NamedInstance> out;
  std::mt19937_64 rng(0x3200 + n);
  out.push_back({"triple-plus-pair", random_grouped_config({3, n - 3}, 0, rng)});
  out.push_back({"two-pairs-plus-singles", random_grouped_config({2, 2}, n - 4, rng)});
  out.push_back({"triple-plus-singles", random_grouped_config({3}, n - 3, rng)});
  out.push_back({"all-accompanied", random_grouped_config({2, n - 2}, 0, rng)});
  out.push_back({"gathered", two_point_config(n, 0, ip(3, 3), ip(0, 0))});
  out.push_back({"triple-collinear", from_points([&] {
                   std::vector<Point> v(3, ip(0, 0));
                   for (std::size_t i = 3; i < n; ++i) v.push_back(ip(static_cast<long>(i * i), 0));
                   return v;
                 }())});
  for (int i = 0; i < 2; ++i) out.push_back({"triple-random-" + std::to_string(i), random_grouped_config({3}, n - 3, rng)});
  return out;
}

std::vector<NamedInstance> lemma_3_3_instances(std::size_t n) {
  std::vector<NamedInstance> out;
  std::mt19937_64 rng(0x3300 + n);
  for (int i = 0; i < 5; ++i) out.push_back({"pair-random-" + std::to_string(i), random_grouped_config({2}, n - 2, rng)});
  std::vector<Point> line(2, ip(0, 0));
  for (std::size_t i = 2; i < n; ++i) line.push_back(ip(static_cast<long>(i * i), 0));
  out.push_back({"pair-collinear", from_points(line)});
  // pair at the center of a circle of singles
  std::vector<Point> ring(2, ip(0, 0));
  Configuration circle = random_cocircular_config(n - 2 >= 3 ? n - 2 : 3, rng);
  for (std::size_t i = 0; i + 2 < n; ++i) ring.push_back(circle.positions[i]);
  out.push_back({"pair-at-center", from_points(ring)});
  return out;
}

std::vector<NamedInstance> lemma_3_4_instances(std::size_t n) {
  std::vector<NamedInstance> out;
  std::mt19937_64 rng(0x3400 + n);
  for (int i = 0; i < 4; ++i) out.push_back({"generic-" + std::to_string(i), random_generic_config(n, rng)});
  for (int i = 0; i < 2; ++i) out.push_back({"cocircular-" + std::to_string(i), random_cocircular_config(n, rng)});
  std::vector<Point> line;
  for (std::size_t i = 0; i < n; ++i) line.push_back(ip(static_cast<long>(i * (i + 1)), 0));
  out.push_back({"collinear", from_points(line)});
  return out;
}

}  // namespace gathersim
