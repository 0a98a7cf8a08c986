#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gsheaf {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q" and surrounding whitespace; rejects q = 0.
  static Rational parse(std::string_view text);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  /// Throws MathError unless the value is an integer that fits in a long.
  long to_long() const;
  double to_double() const { return value_.get_d(); }

  std::string numerator_string() const;
  std::string denominator_string() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws MathError on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace gsheaf
