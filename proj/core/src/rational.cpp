#include "gsheaf/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "gsheaf/error.hpp"

namespace gsheaf {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::string strip_plus(std::string_view text) {
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  return std::string(text);
}

}  // namespace

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw MathError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  const std::string_view num = trim(body.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(body.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) throw ParseError("rational with zero denominator '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

long Rational::to_long() const {
  if (!is_integer()) throw MathError("rational " + to_string() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw MathError("integer " + to_string() + " out of range");
  return n.get_si();
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw MathError("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace gsheaf
