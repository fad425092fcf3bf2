#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gammax {

/// Exact rational number of unbounded size.
///
/// Values are kept in lowest terms with a positive denominator after every
/// operation, so structural equality and value equality coincide.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Accepts "p", "p/q" and plain decimal literals such as "-12.375".
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or just "p" when the denominator is one.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& value);

/// value^exponent for any integer exponent; 0^0 = 1, 0^negative throws.
Rational pow(const Rational& value, long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace gammax
