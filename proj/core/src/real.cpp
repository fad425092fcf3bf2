#include "gammax/real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace gammax {

namespace {

mpfr_prec_t joint_precision(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

std::string format(const char* spec, int digits, mpfr_srcptr value) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, spec, digits, value) < 0) return "nan";
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return std::string(owned.get());
}

}  // namespace

mpfr_prec_t bits_for_digits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Leave `other` as a valid minimal-precision value.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_fixed(int decimals) const { return format("%.*RNf", decimals, value_); }

std::string Real::to_scientific(int significant) const {
  return format("%.*RNe", std::max(significant - 1, 0), value_);
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real out(joint_precision(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(joint_precision(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(joint_precision(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(joint_precision(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log10(const Real& x) {
  Real out(x.precision());
  mpfr_log10(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real expm1(const Real& x) {
  Real out(x.precision());
  mpfr_expm1(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& x, long exponent) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), exponent, MPFR_RNDN);
  return out;
}

Real round(const Real& x) {
  Real out(x.precision());
  mpfr_round(out.get(), x.get());
  return out;
}

Real pi(mpfr_prec_t precision) {
  Real out(precision);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

}  // namespace gammax
