#include "gammax/precision_eval.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "gammax/errors.hpp"

namespace gammax {

namespace {

constexpr std::size_t kMaxStirlingTerms = 30;
constexpr long kMaxShift = 1'000'000;

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::stirling, "stirling"},
    {Family::laplace, "laplace"},
    {Family::ramanujan, "ramanujan"},
    {Family::mortici, "mortici"},
    {Family::nemes_shifted, "nemes_shifted"},
    {Family::nemes_even, "nemes_even"},
}};

// sum_{n=0}^{last} c_n t^n
Real horner(std::span<const Rational> c, std::size_t last, const Real& t) {
  Real acc(c[last], t.precision());
  for (std::size_t n = last; n-- > 0;) acc = acc * t + Real(c[n], t.precision());
  return acc;
}

double log10_abs(const Rational& value) {
  Real r(value, 64);
  return log10(abs(r)).to_double();
}

// Stirling log coefficient of x^{-(2n-1)}: B_2n / (2n (2n-1)).
Rational stirling_term(const FormalSeries& log_series, std::size_t n) { return log_series[2 * n - 1]; }

Real log_of_positive(const Real& sum, const char* what) {
  if (sum.sign() <= 0) {
    throw InvalidArgumentError(std::string("partial sum of the ") + what +
                               " series is not positive at this order and x");
  }
  return log(sum);
}

}  // namespace

PrecisionContext PrecisionContext::with_working_digits(unsigned digits) {
  PrecisionContext ctx;
  ctx.working_digits = digits;
  ctx.target_digits = digits > kGuardDigits ? digits - kGuardDigits : 0;
  ctx.validate();
  return ctx;
}

void PrecisionContext::validate() const {
  if (target_digits == 0) throw InvalidArgumentError("target_digits must be positive");
  if (working_digits < target_digits + kGuardDigits) {
    throw InvalidArgumentError("working precision must exceed the target by " + std::to_string(kGuardDigits) +
                               " guard digits");
  }
}

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  throw InvalidArgumentError("unknown approximation family '" + std::string(name) + "'");
}

void ApproximationSpec::validate() const {
  if (order < 1) throw InvalidArgumentError("approximation order must be positive");
  if ((family == Family::stirling || family == Family::nemes_even) && order % 2 != 0) {
    throw InvalidArgumentError(std::string(to_string(family)) + " is only defined at even orders");
  }
}

std::string EddResult::display(int decimals) const {
  Real scale = pow(Real(10, value.precision()), decimals);
  Real rounded = round(abs(value) * scale) / scale;
  std::string text = rounded.to_fixed(decimals);
  return sign == Sign::minus ? "-" + text : text;
}

double EddResult::signed_value() const { return sign == Sign::minus ? -value.to_double() : value.to_double(); }

Real log_gamma_reference(const Rational& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (x < Rational(1)) throw InvalidArgumentError("log_gamma_reference requires x >= 1, got " + x.to_string());

  const FormalSeries log_series = stirling_log_coeffs(2 * kMaxStirlingTerms + 1);
  const double tolerance_log10 = -static_cast<double>(ctx.target_digits) - 1.0;

  // With T terms the first omitted one is |s_{T+1}| X^{-(2T+1)}; pick the
  // smallest X = x + m that brings it under the tolerance at T = kMaxStirlingTerms.
  auto omitted_log10 = [&](std::size_t terms, double log10_x) {
    return log10_abs(stirling_term(log_series, terms + 1)) - static_cast<double>(2 * terms + 1) * log10_x;
  };
  const double needed_log10_x =
      (log10_abs(stirling_term(log_series, kMaxStirlingTerms + 1)) - tolerance_log10) /
      static_cast<double>(2 * kMaxStirlingTerms + 1);
  const double gap = std::ceil(std::pow(10.0, needed_log10_x) - x.to_double());
  if (gap + 1 > static_cast<double>(kMaxShift)) {
    throw PrecisionError("log_gamma_reference: target of " + std::to_string(ctx.target_digits) +
                         " digits needs an argument shift beyond the configured limit");
  }
  const long shift = gap > 0 ? static_cast<long>(gap) + 1 : 0;

  const Rational shifted = x + Rational(shift);
  const double log10_shifted = std::log10(shifted.to_double());
  std::size_t terms = 1;
  while (terms < kMaxStirlingTerms && omitted_log10(terms, log10_shifted) >= tolerance_log10) ++terms;
  if (omitted_log10(terms, log10_shifted) >= tolerance_log10) {
    throw PrecisionError("log_gamma_reference: Stirling term limit reached before the target accuracy");
  }

  const mpfr_prec_t bits = ctx.bits();
  const Real X(shifted, bits);
  const Real inv_x = Real(1, bits) / X;
  const Real inv_x2 = inv_x * inv_x;

  // sum_{n=1}^{T} s_n X^{-(2n-1)} = X^{-1} sum_{n} s_n (X^{-2})^{n-1}
  Real series(stirling_term(log_series, terms), bits);
  for (std::size_t n = terms - 1; n >= 1; --n) series = series * inv_x2 + Real(stirling_term(log_series, n), bits);
  series *= inv_x;

  const Real half(Rational(1, 2), bits);
  Real value = (X + half) * log(X) - X + half * log(Real(2, bits) * pi(bits)) + series;

  if (shift > 0) {
    Rational product(1);
    for (long i = 1; i <= shift; ++i) product *= x + Rational(i);
    value -= log(Real(product, bits));
  }
  return value;
}

ApproximationEvaluator::ApproximationEvaluator(unsigned max_order)
    : max_order_(max_order),
      stirling_log_(stirling_log_coeffs(std::max(max_order, 1u))),
      laplace_(laplace_coeffs(max_order)),
      ramanujan_(ramanujan_coeffs(max_order)),
      mortici_(mortici_coeffs(max_order)),
      shifted_(nemes_shifted_coeffs(max_order)),
      pairs_(nemes_even_pairs(max_order / 2)) {}

Real ApproximationEvaluator::log_approximation(const ApproximationSpec& spec, const Rational& x,
                                               const PrecisionContext& ctx) const {
  spec.validate();
  ctx.validate();
  if (x < Rational(1)) throw InvalidArgumentError("approximations are evaluated for x >= 1 only");
  if (spec.order > max_order_) {
    throw InvalidArgumentError("order " + std::to_string(spec.order) + " exceeds the evaluator's maximum of " +
                               std::to_string(max_order_));
  }

  const mpfr_prec_t bits = ctx.bits();
  const Real X(x, bits);
  const Real half(Rational(1, 2), bits);
  const Real two_pi = Real(2, bits) * pi(bits);
  const Real base = X * log(X) - X;
  const Real inv_x = Real(1, bits) / X;
  const std::size_t order = spec.order;

  switch (spec.family) {
    case Family::stirling:
      return base + half * log(two_pi * X) + horner(stirling_log_.coefficients(), order - 1, inv_x);
    case Family::laplace:
      return base + half * log(two_pi * X) +
             log_of_positive(horner(laplace_.coefficients(), order, inv_x), "Laplace");
    case Family::ramanujan:
      return base + half * log(two_pi * X) +
             log_of_positive(horner(ramanujan_.coefficients(), order, inv_x), "Ramanujan") / Real(6, bits);
    case Family::mortici:
      return base + half * log(two_pi * X) +
             half * log_of_positive(horner(mortici_.coefficients(), order, inv_x), "Mortici");
    case Family::nemes_shifted: {
      const Real gosper = half * log(two_pi * Real(x + ShiftedCoeffs::base_shift(), bits));
      const Real inv_shifted = Real(1, bits) / Real(x + ShiftedCoeffs::shift(), bits);
      return base + gosper + log_of_positive(horner(shifted_.G, order, inv_shifted), "shifted");
    }
    case Family::nemes_even: {
      const Real gosper = half * log(two_pi * Real(x + ShiftedCoeffs::base_shift(), bits));
      Real sum(1, bits);
      for (std::size_t m = 1; 2 * m <= order; ++m) {
        const Real denominator = pow(Real(x + pairs_.shift(m), bits), static_cast<long>(2 * m));
        sum += Real(pairs_.g(m), bits) / denominator;
      }
      return base + gosper + log_of_positive(sum, "even-pair");
    }
  }
  throw InvalidArgumentError("unhandled approximation family");
}

EddResult ApproximationEvaluator::edd(const ApproximationSpec& spec, const Rational& x,
                                      const PrecisionContext& ctx) const {
  return edd(spec, x, log_gamma_reference(x, ctx), ctx);
}

EddResult ApproximationEvaluator::edd(const ApproximationSpec& spec, const Rational& x, const Real& log_gamma,
                                      const PrecisionContext& ctx) const {
  const Real difference = log_approximation(spec, x, ctx) - log_gamma;
  const Real certified = pow(Real(10, ctx.bits()), -static_cast<long>(ctx.target_digits));
  if (abs(difference) <= certified) {
    throw PrecisionError("approximation agrees with the reference beyond its certified accuracy; raise --precision");
  }
  // |1 - A/Gamma| = |expm1(log A - log Gamma)|
  Real digits = -log10(abs(expm1(difference)));
  if (digits > Real(static_cast<long>(ctx.target_digits) - 10, ctx.bits())) {
    throw PrecisionError("edd within 10 digits of the reference accuracy; raise --precision");
  }
  return EddResult{std::move(digits), difference.sign() < 0 ? Sign::minus : Sign::plus};
}

Real log_approximation(const ApproximationSpec& spec, const Rational& x, const PrecisionContext& ctx) {
  return ApproximationEvaluator(spec.order).log_approximation(spec, x, ctx);
}

EddResult edd(const ApproximationSpec& spec, const Rational& x, const PrecisionContext& ctx) {
  return ApproximationEvaluator(spec.order).edd(spec, x, ctx);
}

}  // namespace gammax
