#include "gathersim/field.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace gathersim {

namespace {

std::atomic<long> g_radicand{3};

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_rational(const Rational& q) {
  std::size_t h = mpz_get_ui(q.get_num_mpz_t());
  h = mix(h, static_cast<std::size_t>(sgn(q) + 1));
  h = mix(h, mpz_get_ui(q.get_den_mpz_t()));
  return h;
}

}  // namespace

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

long radicand() { return g_radicand.load(std::memory_order_relaxed); }

void set_radicand(long d) {
  if (d < 2 || !is_square_free(d)) {
    throw std::invalid_argument("radicand must be a square-free integer >= 2, got " +
                                std::to_string(d));
  }
  g_radicand.store(d, std::memory_order_relaxed);
}

int FieldScalar::sign() const {
  const int sr = sgn(r_);
  const int ss = sgn(s_);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  // Opposite signs: the larger magnitude wins. r^2 == d*s^2 is impossible
  // because sqrt(d) is irrational.
  Rational lhs = r_ * r_;
  Rational rhs = s_ * s_ * radicand();
  return cmp(lhs, rhs) > 0 ? sr : ss;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  r_ += o.r_;
  s_ += o.s_;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
  r_ -= o.r_;
  s_ -= o.s_;
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  if (sgn(s_) == 0 && sgn(o.s_) == 0) {
    r_ *= o.r_;
    return *this;
  }
  Rational r = r_ * o.r_ + s_ * o.s_ * radicand();
  Rational s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  if (o.is_zero()) throw std::domain_error("FieldScalar division by zero");
  if (sgn(o.s_) == 0) {
    r_ /= o.r_;
    s_ /= o.r_;
    return *this;
  }
  // (a + b√d) / (c + e√d) = (a + b√d)(c - e√d) / (c² - d e²)
  Rational norm = o.r_ * o.r_ - o.s_ * o.s_ * radicand();
  FieldScalar conj(o.r_, Rational(-o.s_));
  *this *= conj;
  r_ /= norm;
  s_ /= norm;
  return *this;
}

std::strong_ordering operator<=>(const FieldScalar& a, const FieldScalar& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool FieldScalar::structural_less(const FieldScalar& a, const FieldScalar& b) {
  const int c = cmp(a.r_, b.r_);
  if (c != 0) return c < 0;
  return cmp(a.s_, b.s_) < 0;
}

double FieldScalar::to_double() const {
  return r_.get_d() + s_.get_d() * std::sqrt(static_cast<double>(radicand()));
}

std::string FieldScalar::to_string() const {
  const std::string root = "√" + std::to_string(radicand());
  if (sgn(s_) == 0) return rational_to_string(r_);
  std::string coef;
  if (s_ == 1) {
    coef = root;
  } else if (s_ == -1) {
    coef = "-" + root;
  } else {
    coef = rational_to_string(s_) + root;
  }
  if (sgn(r_) == 0) return coef;
  if (sgn(s_) > 0) return rational_to_string(r_) + "+" + coef;
  return rational_to_string(r_) + coef;
}

std::size_t FieldScalar::hash() const { return mix(hash_rational(r_), hash_rational(s_)); }

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("malformed rational: '" + text + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed rational: '" + text + "'");
      }
    }
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  const auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<FieldScalar> field_sqrt(const FieldScalar& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return FieldScalar{};
  const long d = radicand();
  if (x.is_rational()) {
    if (auto a = rational_sqrt(x.rat())) return FieldScalar(*a);
    if (auto b = rational_sqrt(x.rat() / d)) return FieldScalar(Rational(0), *b);
    return std::nullopt;
  }
  // (a + b√d)² = a² + d b² + 2ab√d, so a² solves 4t² - 4rt + d s² = 0.
  const Rational& r = x.rat();
  const Rational& s = x.coef();
  auto disc = rational_sqrt(r * r - s * s * d);
  if (!disc) return std::nullopt;
  for (const Rational& t : {Rational((r + *disc) / 2), Rational((r - *disc) / 2)}) {
    auto a = rational_sqrt(t);
    if (!a || sgn(*a) == 0) continue;
    FieldScalar y(*a, Rational(s / (2 * *a)));
    if (y.sign() < 0) y = -y;
    if (y * y == x) return y;
  }
  return std::nullopt;
}

}  // namespace gathersim
