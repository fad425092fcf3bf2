#pragma once

#include <compare>
#include <string>

#include "gammax/rational.hpp"

// gmp.h must precede mpfr.h for the mpz/mpq interfaces.
#include <mpfr.h>

namespace gammax {

/// Bits needed to carry `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(unsigned digits);

/// Owning MPFR floating-point value with a fixed binary precision.
///
/// Results of binary operations take the larger precision of the operands and
/// are rounded to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t precision);
  Real(long value, mpfr_prec_t precision);
  Real(const Rational& value, mpfr_prec_t precision);
  Real(const mpz_class& value, mpfr_prec_t precision);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Fixed-point rendering with `decimals` digits after the point, rounded to nearest.
  std::string to_fixed(int decimals) const;
  /// Scientific rendering with `significant` digits.
  std::string to_scientific(int significant) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real log(const Real& x);
Real log10(const Real& x);
Real exp(const Real& x);
/// exp(x) - 1 without cancellation near zero.
Real expm1(const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, long exponent);
/// Round to the nearest integer, halves away from zero.
Real round(const Real& x);
Real pi(mpfr_prec_t precision);

}  // namespace gammax
