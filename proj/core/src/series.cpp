#include "gammax/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gammax/combinatorics.hpp"
#include "gammax/errors.hpp"

namespace gammax {

namespace {

Rational as_rational(std::size_t n) { return Rational(static_cast<long>(n)); }

void require_plain(const FormalSeries& a, const char* op) {
  if (a.exponent_offset() != 0) {
    throw OffsetMismatchError(std::string(op) + " requires exponent offset 0, got " +
                              std::to_string(a.exponent_offset()));
  }
}

// binom(-j, l) s^l for l = 0..max_l.
std::vector<Rational> shift_kernel(std::size_t j, const Rational& s, std::size_t max_l) {
  std::vector<Rational> out;
  out.reserve(max_l + 1);
  Rational s_power(1);
  const Rational r = -as_rational(j);
  for (std::size_t l = 0; l <= max_l; ++l) {
    out.push_back(binomial_general(r, l) * s_power);
    s_power *= s;
  }
  return out;
}

}  // namespace

FormalSeries::FormalSeries(std::vector<Rational> coefficients, int exponent_offset)
    : coefficients_(std::move(coefficients)), exponent_offset_(exponent_offset) {
  if (coefficients_.empty()) throw InvalidArgumentError("a series needs at least one coefficient");
}

FormalSeries FormalSeries::zero(std::size_t order) {
  return FormalSeries(std::vector<Rational>(order + 1));
}

FormalSeries FormalSeries::one(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = Rational(1);
  return FormalSeries(std::move(c));
}

FormalSeries FormalSeries::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return FormalSeries({coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(order) + 1},
                      exponent_offset_);
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  if (a.exponent_offset() != b.exponent_offset()) {
    throw OffsetMismatchError("cannot add series with exponent offsets " +
                              std::to_string(a.exponent_offset()) + " and " +
                              std::to_string(b.exponent_offset()));
  }
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return FormalSeries(std::move(c), a.exponent_offset());
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
  return a + Rational(-1) * b;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return FormalSeries(std::move(c), a.exponent_offset() + b.exponent_offset());
}

FormalSeries operator*(const Rational& scalar, const FormalSeries& a) {
  std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= scalar;
  return FormalSeries(std::move(c), a.exponent_offset());
}

FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) {
  if (b[0].is_zero()) throw LeadingCoefficientError("series division by a series with zero constant term");
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> q(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Rational acc = a[i];
    for (std::size_t k = 1; k <= i; ++k) acc -= b[k] * q[i - k];
    q[i] = acc / b[0];
  }
  return FormalSeries(std::move(q), a.exponent_offset() - b.exponent_offset());
}

FormalSeries pow(const FormalSeries& a, const Rational& r) {
  require_plain(a, "pow");
  if (a[0] != Rational(1)) {
    throw LeadingCoefficientError("pow requires a unit constant term, got " + a[0].to_string());
  }
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  const Rational r1 = r + Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (a[k].is_zero()) continue;
      acc += (r1 * as_rational(k) - as_rational(m)) * a[k] * b[m - k];
    }
    b[m] = acc / as_rational(m);
  }
  return FormalSeries(std::move(b));
}

FormalSeries exp(const FormalSeries& a) {
  require_plain(a, "exp");
  if (!a[0].is_zero()) {
    throw LeadingCoefficientError("exp requires a zero constant term, got " + a[0].to_string());
  }
  const std::size_t n = a.order();
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (a[k].is_zero()) continue;
      acc += as_rational(k) * a[k] * b[m - k];
    }
    b[m] = acc / as_rational(m);
  }
  return FormalSeries(std::move(b));
}

FormalSeries scale_argument(const FormalSeries& a, const Rational& lambda) {
  if (lambda.is_zero()) throw InvalidArgumentError("scale_argument requires a nonzero factor");
  // (lambda x)^p sum c_n (lambda x)^{-n}
  std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
  Rational factor = pow(lambda, a.exponent_offset());
  const Rational inverse = Rational(1) / lambda;
  for (auto& coefficient : c) {
    coefficient *= factor;
    factor *= inverse;
  }
  return FormalSeries(std::move(c), a.exponent_offset());
}

ShiftedSeries shift_reexpand(const FormalSeries& a, const Rational& shift) {
  require_plain(a, "shift_reexpand");
  const std::size_t n = a.order();
  std::vector<std::vector<Rational>> kernels;
  kernels.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) kernels.push_back(shift_kernel(j, shift, n - j));

  // The forward map is unit lower triangular (binom(-k, 0) = 1), so solve top-down.
  std::vector<Rational> d(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = a[k];
    for (std::size_t j = 0; j < k; ++j) acc -= kernels[j][k - j] * d[j];
    d[k] = std::move(acc);
  }
  return ShiftedSeries{shift, std::move(d)};
}

FormalSeries expand_shifted(const ShiftedSeries& shifted) {
  const std::size_t n = shifted.order();
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    if (shifted.coefficients[j].is_zero()) continue;
    const auto kernel = shift_kernel(j, shifted.shift, n - j);
    for (std::size_t l = 0; j + l <= n; ++l) c[j + l] += kernel[l] * shifted.coefficients[j];
  }
  return FormalSeries(std::move(c));
}

}  // namespace gammax
