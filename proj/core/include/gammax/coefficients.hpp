#pragma once

#include <cstddef>
#include <vector>

#include "gammax/rational.hpp"
#include "gammax/real.hpp"
#include "gammax/series.hpp"

namespace gammax {

// Coefficient generators for the Gamma-function expansions. Unless noted,
// a generator of order N returns coefficients 0..N of a series in 1/x.

/// log Gamma(x+1) - [(x+1/2) log x - x + log(2 pi)/2]: c_{2k-1} = B_{2k} / (2k (2k-1)). Requires N >= 1.
FormalSeries stirling_log_coeffs(std::size_t order);

/// a_n in Gamma(x+1) ~ x^x e^{-x} sqrt(2 pi x) sum a_n x^{-n}; exp of the log series.
/// Memoized; safe to call concurrently.
FormalSeries laplace_coeffs(std::size_t order);

/// Sixth power of the Laplace series: 1 + 1/(2x) + 1/(8x^2) + 1/(240x^3) + ...
FormalSeries ramanujan_coeffs(std::size_t order);

/// 8 x^3 times the Ramanujan radicand (exponent offset 3): 8x^3 + 4x^2 + x + 1/30 - ...
FormalSeries karatsuba_coeffs(std::size_t order);

/// Square of the Laplace series: 1 + 1/(6x) + 1/(72x^2) - 31/(6480x^3) + ...
FormalSeries mortici_coeffs(std::size_t order);

/// Coefficients of Gamma(x+1) e^x / (x^x sqrt(2 pi (x + 1/6))) in powers of 1/x.
struct GosperBaseSeries {
  std::vector<Rational> c;

  std::size_t order() const { return c.size() - 1; }
  FormalSeries as_series() const { return FormalSeries(c); }
};

/// c_n = sum_{j<=n} binom(-1/2, j) a_{n-j} / 6^j, by direct double sum.
GosperBaseSeries gosper_base_coeffs(std::size_t order);

/// Same coefficients via the series algebra: laplace * (1 + 1/(6x))^{-1/2}.
GosperBaseSeries gosper_base_coeffs_via_series(std::size_t order);

/// G_k in Gamma(x+1) ~ x^x e^{-x} sqrt(2 pi (x + 1/6)) sum G_k (x + 1/4)^{-k}.
struct ShiftedCoeffs {
  std::vector<Rational> G;

  static Rational shift() { return Rational(1, 4); }
  static Rational base_shift() { return Rational(1, 6); }

  std::size_t order() const { return G.size() - 1; }
  ShiftedSeries as_shifted_series() const { return ShiftedSeries{shift(), G}; }
};

/// G_k = c_k - sum_{j<k} binom(-j, k-j) G_j / 4^{k-j}.
ShiftedCoeffs nemes_shifted_coeffs(std::size_t order);

/// The pairs (g_m, v_m) of sum_m g_m / (x + v_m)^{2m}; v_0 does not exist.
class EvenPairSequence {
 public:
  EvenPairSequence(std::vector<Rational> g, std::vector<Rational> v);

  /// Largest index M.
  std::size_t max_index() const { return g_.size() - 1; }
  const Rational& g(std::size_t m) const { return g_.at(m); }
  /// v_m for m >= 1; throws UndefinedShiftError for m = 0.
  const Rational& shift(std::size_t m) const;

  const std::vector<Rational>& g_values() const { return g_; }
  /// v_1 ... v_M.
  const std::vector<Rational>& shift_values() const { return v_; }

 private:
  std::vector<Rational> g_;
  std::vector<Rational> v_;
};

/// Solves sum_{j<=n} binom(-1/2,j) a_{n-j}/6^j = sum_{j<=n/2} binom(-2j, n-2j) g_j v_j^{n-2j}
/// order by order: order 2m fixes g_m, order 2m+1 fixes v_m. Throws DegeneratePairError
/// when some g_m with m >= 1 is zero.
EvenPairSequence nemes_even_pairs(std::size_t max_index);

/// The same order-by-order solve for arbitrary base coefficients; needs base order >= 2M+1.
EvenPairSequence solve_even_pairs(const GosperBaseSeries& base, std::size_t max_index);

/// Floating-point counterpart of nemes_even_pairs for indices where exact
/// rationals become unwieldy. The c_n are exact; the recurrence runs in MPFR.
struct NumericPairSequence {
  std::vector<Real> g;
  std::vector<Real> v;  // v_1 ... v_M

  std::size_t max_index() const { return g.size() - 1; }
};

NumericPairSequence nemes_even_pairs_numeric(std::size_t max_index, mpfr_prec_t precision);

/// T(n) in binom(2n, n) ~ 4^n / sqrt(pi n) * T(n); equals L(2n) / L(n)^2.
FormalSeries central_binomial_coeffs(std::size_t order);

/// T re-expressed as binom(2n, n) ~ 4^n / sqrt(pi (n + 1/4)) * sum d_k (n + 1/4)^{-k}.
ShiftedSeries central_binomial_shifted(std::size_t order);

}  // namespace gammax
