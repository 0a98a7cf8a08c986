#include "gsheaf/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace gsheaf {

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

Rational Poly::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::evaluate(const Rational& m) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m + *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  trim();
  return *this;
}

Poly Poly::mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) os << mag;
    if (k >= 1) os << (k == 0 || unit ? "" : " ") << "m";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

EventualSign eventual_sign(const Poly& p) {
  if (p.is_zero()) return EventualSign::Zero;
  return p.leading().sign() < 0 ? EventualSign::Negative : EventualSign::Positive;
}

bool cmp_zero(const Poly& p, Comparison mode) {
  const EventualSign s = eventual_sign(p);
  if (mode == Comparison::Strict) return s == EventualSign::Negative;
  return s != EventualSign::Positive;
}

EventualSign eventual_compare(const Poly& a, const Poly& b) { return eventual_sign(a - b); }

const char* to_string(EventualSign sign) {
  switch (sign) {
    case EventualSign::Negative: return "negative";
    case EventualSign::Zero: return "zero";
    case EventualSign::Positive: return "positive";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace gsheaf
