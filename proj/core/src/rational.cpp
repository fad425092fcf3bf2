#include "gammax/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "gammax/errors.hpp"

namespace gammax {

namespace {

bool is_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits)) throw ParseError("not a rational literal: '" + std::string(whole) + "'");
  mpz_class out;
  out.set_str(std::string(text.front() == '+' ? text.substr(1) : text), 10);
  return out;
}

}  // namespace

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZeroError();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DivisionByZeroError();
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZeroError();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) throw ParseError("bad denominator in '" + std::string(whole) + "'");
    return Rational(num, mpz_class(std::string(den_text), 10));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !is_digits(int_part)) ||
        (!frac_part.empty() && !is_digits(frac_part))) {
      throw ParseError("not a decimal literal: '" + std::string(whole) + "'");
    }
    mpz_class num(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    if (negative) num = -num;
    return Rational(num, den);
  }

  return Rational(parse_integer(text, whole), mpz_class(1));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZeroError();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

Rational pow(const Rational& value, long exponent) {
  if (exponent < 0) {
    if (value.is_zero()) throw DivisionByZeroError();
    return Rational(1) / pow(value, -exponent);
  }
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), value.numerator().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value.denominator().get_mpz_t(), e);
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace gammax
