#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gammax/rational.hpp"

namespace gammax {

/// Truncated formal series x^p * sum_{n=0}^{N} c_n x^{-n} with exact coefficients.
///
/// N is the truncation order: coefficients up to and including index N are
/// valid, nothing beyond is known. Binary operations truncate both operands to
/// the smaller order and the result carries that order.
class FormalSeries {
 public:
  /// Requires at least one coefficient.
  explicit FormalSeries(std::vector<Rational> coefficients, int exponent_offset = 0);

  static FormalSeries zero(std::size_t order);
  static FormalSeries one(std::size_t order);

  std::size_t order() const { return coefficients_.size() - 1; }
  int exponent_offset() const { return exponent_offset_; }
  std::span<const Rational> coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t n) const { return coefficients_.at(n); }

  FormalSeries truncated(std::size_t order) const;

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
  int exponent_offset_ = 0;
};

/// sum_{n=0}^{N} d_n (x + s)^{-n}.
struct ShiftedSeries {
  Rational shift;
  std::vector<Rational> coefficients;

  std::size_t order() const { return coefficients.size() - 1; }

  friend bool operator==(const ShiftedSeries&, const ShiftedSeries&) = default;
};

/// Throws OffsetMismatchError when the x^p prefactors differ.
FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
/// Cauchy product; exponent offsets add.
FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
/// Multiplies every coefficient; offset and order unchanged.
FormalSeries operator*(const Rational& scalar, const FormalSeries& a);
/// Throws LeadingCoefficientError when b's constant term is zero.
FormalSeries operator/(const FormalSeries& a, const FormalSeries& b);

/// a^r for a unit series (c_0 = 1, offset 0), via the J.C.P. Miller recurrence
///   n b_n = sum_{k=1}^{n} ((r+1) k - n) a_k b_{n-k}.
FormalSeries pow(const FormalSeries& a, const Rational& r);

/// exp(a) for a series with zero constant term and offset 0, via
///   n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
FormalSeries exp(const FormalSeries& a);

/// Substitutes x -> lambda * x.
FormalSeries scale_argument(const FormalSeries& a, const Rational& lambda);

/// Rewrites sum c_n x^{-n} as sum d_n (x+s)^{-n} to the same order.
ShiftedSeries shift_reexpand(const FormalSeries& a, const Rational& shift);

/// Inverse of shift_reexpand: c_k = sum_{j<=k} binom(-j, k-j) d_j s^{k-j}.
FormalSeries expand_shifted(const ShiftedSeries& shifted);

}  // namespace gammax
