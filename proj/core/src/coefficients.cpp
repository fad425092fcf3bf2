#include "gammax/coefficients.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "gammax/combinatorics.hpp"
#include "gammax/errors.hpp"

namespace gammax {

namespace {

Rational as_rational(std::size_t n) { return Rational(static_cast<long>(n)); }

struct LaplaceMemo {
  std::mutex mutex;
  std::optional<FormalSeries> series;
};

LaplaceMemo& laplace_memo() {
  static LaplaceMemo memo;
  return memo;
}

}  // namespace

FormalSeries stirling_log_coeffs(std::size_t order) {
  if (order < 1) throw InvalidArgumentError("stirling_log_coeffs requires order >= 1");
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 1; 2 * k - 1 <= order; ++k) {
    c[2 * k - 1] = bernoulli(2 * k) / (as_rational(2 * k) * as_rational(2 * k - 1));
  }
  return FormalSeries(std::move(c));
}

FormalSeries laplace_coeffs(std::size_t order) {
  auto& memo = laplace_memo();
  std::lock_guard lock(memo.mutex);
  if (!memo.series || memo.series->order() < order) {
    memo.series = exp(stirling_log_coeffs(std::max<std::size_t>(order, 1)));
  }
  return memo.series->truncated(order);
}

FormalSeries ramanujan_coeffs(std::size_t order) { return pow(laplace_coeffs(order), Rational(6)); }

FormalSeries karatsuba_coeffs(std::size_t order) {
  const FormalSeries radicand = Rational(8) * ramanujan_coeffs(order);
  return FormalSeries({radicand.coefficients().begin(), radicand.coefficients().end()}, 3);
}

FormalSeries mortici_coeffs(std::size_t order) { return pow(laplace_coeffs(order), Rational(2)); }

GosperBaseSeries gosper_base_coeffs(std::size_t order) {
  const FormalSeries a = laplace_coeffs(order);
  const Rational minus_half(-1, 2);
  std::vector<Rational> weights;  // binom(-1/2, j) / 6^j
  weights.reserve(order + 1);
  Rational sixth_power(1);
  for (std::size_t j = 0; j <= order; ++j) {
    weights.push_back(binomial_general(minus_half, j) * sixth_power);
    sixth_power /= Rational(6);
  }
  std::vector<Rational> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t j = 0; j <= n; ++j) c[n] += weights[j] * a[n - j];
  }
  return GosperBaseSeries{std::move(c)};
}

GosperBaseSeries gosper_base_coeffs_via_series(std::size_t order) {
  std::vector<Rational> unit(order + 1);
  unit[0] = Rational(1);
  if (order >= 1) unit[1] = Rational(1, 6);
  const FormalSeries product = laplace_coeffs(order) * pow(FormalSeries(std::move(unit)), Rational(-1, 2));
  return GosperBaseSeries{{product.coefficients().begin(), product.coefficients().end()}};
}

ShiftedCoeffs nemes_shifted_coeffs(std::size_t order) {
  const ShiftedSeries shifted = shift_reexpand(gosper_base_coeffs(order).as_series(), ShiftedCoeffs::shift());
  return ShiftedCoeffs{shifted.coefficients};
}

EvenPairSequence::EvenPairSequence(std::vector<Rational> g, std::vector<Rational> v)
    : g_(std::move(g)), v_(std::move(v)) {
  if (g_.empty() || g_.front() != Rational(1)) throw InvalidArgumentError("pair sequence needs g_0 = 1");
  if (v_.size() + 1 != g_.size()) throw InvalidArgumentError("pair sequence needs one v_m per g_m, m >= 1");
}

const Rational& EvenPairSequence::shift(std::size_t m) const {
  if (m == 0) throw UndefinedShiftError();
  return v_.at(m - 1);
}

EvenPairSequence nemes_even_pairs(std::size_t max_index) {
  return solve_even_pairs(gosper_base_coeffs(2 * max_index + 1), max_index);
}

EvenPairSequence solve_even_pairs(const GosperBaseSeries& base, std::size_t max_index) {
  if (base.c.size() < 2 * max_index + 2) {
    throw InvalidArgumentError("pair solving to M = " + std::to_string(max_index) + " needs base order " +
                               std::to_string(2 * max_index + 1));
  }
  std::vector<Rational> g{Rational(1)};
  std::vector<Rational> v;

  // Contribution of the already-solved pairs j = 1..m-1 at order n:
  // sum binom(-2j, n-2j) g_j v_j^{n-2j}.
  auto known_terms = [&](std::size_t m, std::size_t n) {
    Rational acc;
    for (std::size_t j = 1; j < m; ++j) {
      const std::size_t power = n - 2 * j;
      acc += binomial_general(-as_rational(2 * j), power) * g[j] * pow(v[j - 1], static_cast<long>(power));
    }
    return acc;
  };

  for (std::size_t m = 1; m <= max_index; ++m) {
    Rational gm = base.c[2 * m] - known_terms(m, 2 * m);
    if (gm.is_zero()) throw DegeneratePairError(m);
    // binom(-2m, 1) = -2m multiplies g_m v_m at order 2m+1.
    Rational vm = -(base.c[2 * m + 1] - known_terms(m, 2 * m + 1)) / (as_rational(2 * m) * gm);
    g.push_back(std::move(gm));
    v.push_back(std::move(vm));
  }
  return EvenPairSequence(std::move(g), std::move(v));
}

NumericPairSequence nemes_even_pairs_numeric(std::size_t max_index, mpfr_prec_t precision) {
  const GosperBaseSeries base = gosper_base_coeffs(2 * max_index + 1);
  NumericPairSequence out{{Real(1, precision)}, {}};

  auto known_terms = [&](std::size_t m, std::size_t n) {
    Real acc(precision);
    for (std::size_t j = 1; j < m; ++j) {
      const std::size_t power = n - 2 * j;
      const Real kernel(binomial_general(-as_rational(2 * j), power), precision);
      acc += kernel * out.g[j] * pow(out.v[j - 1], static_cast<long>(power));
    }
    return acc;
  };

  for (std::size_t m = 1; m <= max_index; ++m) {
    Real gm = Real(base.c[2 * m], precision) - known_terms(m, 2 * m);
    if (gm.is_zero()) throw DegeneratePairError(m);
    Real vm = -(Real(base.c[2 * m + 1], precision) - known_terms(m, 2 * m + 1)) /
              (Real(static_cast<long>(2 * m), precision) * gm);
    out.g.push_back(std::move(gm));
    out.v.push_back(std::move(vm));
  }
  return out;
}

FormalSeries central_binomial_coeffs(std::size_t order) {
  const FormalSeries laplace = laplace_coeffs(order);
  return scale_argument(laplace, Rational(2)) / (laplace * laplace);
}

ShiftedSeries central_binomial_shifted(std::size_t order) {
  // 1/sqrt(n) = (1 + 1/(4n))^{1/2} / sqrt(n + 1/4)
  std::vector<Rational> unit(order + 1);
  unit[0] = Rational(1);
  if (order >= 1) unit[1] = Rational(1, 4);
  const FormalSeries corrected = pow(FormalSeries(std::move(unit)), Rational(1, 2)) * central_binomial_coeffs(order);
  return shift_reexpand(corrected, Rational(1, 4));
}

}  // namespace gammax
