#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "gsheaf/rational.hpp"

namespace gsheaf {

/// Sign of p(m) for all sufficiently large m.
enum class EventualSign { Negative, Zero, Positive };

/// Strict asks for p ≺ 0, Weak for p ⪯ 0.
enum class Comparison { Strict, Weak };

/// Dense univariate polynomial in m over the rationals.
/// Coefficients are indexed by degree; trailing zeros are never stored.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coefficients);
  explicit Poly(std::vector<Rational> coefficients);

  static Poly constant(const Rational& c);
  /// c·m^degree
  static Poly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t degree) const;
  Rational leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& m) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& factor);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) { return scale(a, Rational(-1)); }
  friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  static Poly scale(Poly p, const Rational& factor) { return p *= factor; }
  static Poly mul(const Poly& a, const Poly& b);

  /// Human-readable form, e.g. "3/2 m^2 + 7/2 m + 2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Sign of the leading coefficient; Zero for the zero polynomial.
EventualSign eventual_sign(const Poly& p);

/// Strict: p ≺ 0. Weak: p ⪯ 0.
bool cmp_zero(const Poly& p, Comparison mode);

/// Eventual order on polynomials: sign of a − b.
EventualSign eventual_compare(const Poly& a, const Poly& b);

const char* to_string(EventualSign sign);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace gsheaf
