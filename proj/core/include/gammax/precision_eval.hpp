#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammax/coefficients.hpp"
#include "gammax/rational.hpp"
#include "gammax/real.hpp"

namespace gammax {

/// Working precision and certified accuracy of the reference value, in decimal digits.
struct PrecisionContext {
  unsigned working_digits = 120;
  unsigned target_digits = 100;

  static constexpr unsigned kGuardDigits = 20;

  /// Context with the largest target the guard-digit rule allows.
  static PrecisionContext with_working_digits(unsigned digits);

  mpfr_prec_t bits() const { return bits_for_digits(working_digits); }
  /// Throws InvalidArgumentError unless working_digits >= target_digits + kGuardDigits.
  void validate() const;
};

enum class Family { stirling, laplace, ramanujan, mortici, nemes_shifted, nemes_even };

std::string_view to_string(Family family);
/// Accepts the names produced by to_string; throws InvalidArgumentError otherwise.
Family parse_family(std::string_view name);

/// One approximation formula truncated at a given order (a table column).
struct ApproximationSpec {
  Family family = Family::laplace;
  unsigned order = 1;

  /// Stirling and nemes_even only exist at even orders; all orders are >= 1.
  void validate() const;
};

enum class Sign { plus, minus };

/// Exact decimal digits of an approximation; `sign` is minus when the approximation undershoots.
struct EddResult {
  Real value;
  Sign sign;

  /// Value rounded half away from zero to `decimals` places, "-" prefixed for undershoot.
  std::string display(int decimals = 1) const;
  double signed_value() const;
};

/// log Gamma(x+1) with absolute error below 10^-target_digits, for x >= 1.
///
/// Sums the Stirling log series at x + m, with the integer shift m chosen so
/// that the first omitted term is below the target, then removes the shift
/// with sum log(x + i). Relies on the series enveloping its value for real
/// arguments, so the first omitted term bounds the truncation error.
Real log_gamma_reference(const Rational& x, const PrecisionContext& ctx = {});

/// Precomputed coefficient tables for every family up to a maximum order.
///
/// Immutable after construction; a single evaluator may serve concurrent callers.
class ApproximationEvaluator {
 public:
  explicit ApproximationEvaluator(unsigned max_order = 10);

  unsigned max_order() const { return max_order_; }

  /// Natural log of the truncated approximation to Gamma(x+1).
  Real log_approximation(const ApproximationSpec& spec, const Rational& x, const PrecisionContext& ctx = {}) const;

  EddResult edd(const ApproximationSpec& spec, const Rational& x, const PrecisionContext& ctx = {}) const;
  /// Same, reusing an already computed log Gamma(x+1).
  EddResult edd(const ApproximationSpec& spec, const Rational& x, const Real& log_gamma,
                const PrecisionContext& ctx) const;

 private:
  unsigned max_order_;
  FormalSeries stirling_log_;
  FormalSeries laplace_;
  FormalSeries ramanujan_;
  FormalSeries mortici_;
  ShiftedCoeffs shifted_;
  EvenPairSequence pairs_;
};

Real log_approximation(const ApproximationSpec& spec, const Rational& x, const PrecisionContext& ctx = {});
EddResult edd(const ApproximationSpec& spec, const Rational& x, const PrecisionContext& ctx = {});

}  // namespace gammax
