#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace gathersim {

using Rational = mpq_class;

/// Radicand d of the coordinate field Q(sqrt d). Process-wide, default 3.
/// Must be square-free and at least 2; set it before any scalar is built.
long radicand();
void set_radicand(long d);

bool is_square_free(long d);

/// Exact number r + s*sqrt(d) with rational r, s.
///
/// Rationals are kept canonical (GMP normalizes after every operation), so
/// structural equality coincides with value equality. Ordering is by value:
/// the sign of r + s*sqrt(d) is decided by comparing r^2 against d*s^2.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long v) : r_(v) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(Rational r) : r_(std::move(r)) { r_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  FieldScalar(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {
    r_.canonicalize();
    s_.canonicalize();
  }

  /// sqrt(d) itself.
  static FieldScalar root() { return {Rational(0), Rational(1)}; }

  const Rational& rat() const { return r_; }
  const Rational& coef() const { return s_; }

  int sign() const;
  bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
  bool is_rational() const { return sgn(s_) == 0; }

  FieldScalar& operator+=(const FieldScalar& o);
  FieldScalar& operator-=(const FieldScalar& o);
  FieldScalar& operator*=(const FieldScalar& o);
  /// Throws std::domain_error on a zero divisor.
  FieldScalar& operator/=(const FieldScalar& o);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
  friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }
  FieldScalar operator-() const { return {Rational(-r_), Rational(-s_)}; }

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.r_ == b.r_ && a.s_ == b.s_;
  }
  friend std::strong_ordering operator<=>(const FieldScalar& a, const FieldScalar& b);

  /// Cheap total order on the representation (r first, then s). Not the
  /// value order; used for map keys and canonical sorting.
  static bool structural_less(const FieldScalar& a, const FieldScalar& b);

  double to_double() const;

  /// Human-readable exact form, e.g. "1/2+3/2√3", "-√3", "0".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  Rational r_{0};
  Rational s_{0};
};

/// Canonical text for a rational: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);
/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or q == 0.
Rational rational_from_string(const std::string& text);

/// Square root inside the field, when one exists.
std::optional<FieldScalar> field_sqrt(const FieldScalar& x);

}  // namespace gathersim
