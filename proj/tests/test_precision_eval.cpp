#include <doctest.h>

#include <thread>
#include <vector>

#include "gammax/errors.hpp"
#include "gammax/precision_eval.hpp"
#include "test_support.hpp"

using namespace gammax;
using gammax::test::Q;

namespace {

// log(x!) from the exact integer factorial, evaluated at `bits`.
Real log_factorial(unsigned long x, mpfr_prec_t bits) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), x);
  return log(Real(f, bits));
}

Real ten_to(long exponent, mpfr_prec_t bits) { return pow(Real(10, bits), exponent); }

std::vector<ApproximationSpec> all_specs() {
  std::vector<ApproximationSpec> specs;
  for (Family f : {Family::stirling, Family::laplace, Family::ramanujan, Family::mortici, Family::nemes_shifted}) {
    for (unsigned order = 1; order <= 8; ++order) {
      if (f == Family::stirling && order % 2) continue;
      specs.push_back({f, order});
    }
  }
  for (unsigned order = 2; order <= 10; order += 2) specs.push_back({Family::nemes_even, order});
  return specs;
}

}  // namespace

TEST_CASE("precision context invariants") {
  const PrecisionContext ctx;
  CHECK(ctx.working_digits == 120);
  CHECK(ctx.target_digits == 100);
  CHECK_NOTHROW(ctx.validate());
  CHECK(PrecisionContext::with_working_digits(240).target_digits == 220);
  CHECK_THROWS_AS((PrecisionContext{100, 90}.validate()), InvalidArgumentError);
  CHECK_THROWS_AS(PrecisionContext::with_working_digits(20), InvalidArgumentError);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::stirling, Family::laplace, Family::ramanujan, Family::mortici, Family::nemes_shifted,
                   Family::nemes_even}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_family("karatsuba"), InvalidArgumentError);
}

TEST_CASE("approximation spec validation") {
  CHECK_NOTHROW((ApproximationSpec{Family::stirling, 2}.validate()));
  CHECK_THROWS_AS((ApproximationSpec{Family::stirling, 3}.validate()), InvalidArgumentError);
  CHECK_THROWS_AS((ApproximationSpec{Family::nemes_even, 5}.validate()), InvalidArgumentError);
  CHECK_THROWS_AS((ApproximationSpec{Family::laplace, 0}.validate()), InvalidArgumentError);
  CHECK_NOTHROW((ApproximationSpec{Family::laplace, 7}.validate()));
}

TEST_CASE("log_gamma_reference agrees with exact factorials") {
  const PrecisionContext ctx;
  const mpfr_prec_t bits = bits_for_digits(200);
  for (unsigned long x : {1ul, 2ul, 5ul, 50ul, 100ul, 137ul, 200ul}) {
    CAPTURE(x);
    const Real error = abs(log_gamma_reference(Rational(static_cast<long>(x)), ctx) - log_factorial(x, bits));
    CHECK(error < ten_to(-100, bits));
  }
}

TEST_CASE("log_gamma_reference matches a frozen oracle value") {
  // mpmath log(100!) to 70 significant digits (tests/oracle/freeze_values.py).
  const Real oracle(Q("363.7393755555634901440799933696556380278239210628872747276794488767759"), bits_for_digits(120));
  CHECK(abs(log_gamma_reference(Rational(100)) - oracle) < ten_to(-66, bits_for_digits(120)));
}

TEST_CASE("log_gamma_reference satisfies the functional equation") {
  const PrecisionContext ctx;
  const mpfr_prec_t bits = ctx.bits();
  for (long x : {100L, 1000L, 10000L}) {
    const Real lhs = log_gamma_reference(Rational(x + 1), ctx) - log_gamma_reference(Rational(x), ctx);
    const Real rhs = log(Real(x + 1, bits));
    CHECK(abs(lhs - rhs) < ten_to(-static_cast<long>(ctx.target_digits), bits));
  }
  // Non-integer arguments: Gamma(x+2) = (x+1) Gamma(x+1).
  const Rational x = Q("12.375");
  const Real step = log_gamma_reference(x + Rational(1), ctx) - log_gamma_reference(x, ctx);
  CHECK(abs(step - log(Real(x + Rational(1), bits))) < ten_to(-100, bits));
}

TEST_CASE("log_gamma_reference preconditions and limits") {
  CHECK_THROWS_AS(log_gamma_reference(Q("1/2")), InvalidArgumentError);
  CHECK_THROWS_AS(log_gamma_reference(Rational(10), PrecisionContext{6000, 5000}), PrecisionError);
}

TEST_CASE("log_approximation instantiates the formulas directly") {
  const PrecisionContext ctx;
  const mpfr_prec_t bits = ctx.bits();
  const Real x(100, bits);
  const Real tolerance = ten_to(-110, bits);
  const Real two_pi_x = Real(2, bits) * pi(bits) * x;
  const Real half(Rational(1, 2), bits);

  // log(100^100 e^-100 sqrt(200 pi) (1 + 1/1200))
  const Real laplace = x * log(x) - x + half * log(two_pi_x) + log(Real(Q("1201/1200"), bits));
  CHECK(abs(log_approximation({Family::laplace, 1}, Rational(100), ctx) - laplace) < tolerance);

  const Real stirling = x * log(x) - x + half * log(two_pi_x) + Real(Q("1/1200"), bits);
  CHECK(abs(log_approximation({Family::stirling, 2}, Rational(100), ctx) - stirling) < tolerance);

  // Gosper: order 1 of the shifted family has G_1 = 0.
  const Real gosper = x * log(x) - x + half * log(Real(2, bits) * pi(bits) * Real(Q("601/6"), bits));
  CHECK(abs(log_approximation({Family::nemes_shifted, 1}, Rational(100), ctx) - gosper) < tolerance);

  // Mortici order 1 is Gosper's formula too: sqrt(2 pi x (1 + 1/(6x))).
  CHECK(abs(log_approximation({Family::mortici, 1}, Rational(100), ctx) - gosper) < tolerance);

  // nemes_even order 2: times 1 + (1/144) / (x + 23/90)^2.
  const Real even = gosper + log(Real(1, bits) + Real(Q("1/144"), bits) / pow(Real(Q("9023/90"), bits), 2));
  CHECK(abs(log_approximation({Family::nemes_even, 2}, Rational(100), ctx) - even) < tolerance);
}

TEST_CASE("log_approximation errors") {
  const ApproximationEvaluator evaluator(4);
  CHECK_THROWS_AS(evaluator.log_approximation({Family::laplace, 5}, Rational(100)), InvalidArgumentError);
  CHECK_THROWS_AS(evaluator.log_approximation({Family::laplace, 2}, Q("1/2")), InvalidArgumentError);
  CHECK_THROWS_AS(evaluator.log_approximation({Family::stirling, 3}, Rational(100)), InvalidArgumentError);
}

TEST_CASE("edd reproduces published cells") {
  const EddResult laplace = edd({Family::laplace, 1}, Rational(100));
  CHECK(laplace.display() == "-6.5");
  CHECK(laplace.sign == Sign::minus);

  const EddResult ramanujan = edd({Family::ramanujan, 7}, Rational(1000));
  CHECK(ramanujan.display() == "27.5");
  CHECK(ramanujan.sign == Sign::plus);

  const EddResult even = edd({Family::nemes_even, 8}, Rational(10000));
  CHECK(even.display() == "-42.9");

  const EddResult shifted = edd({Family::nemes_shifted, 2}, Rational(100));
  CHECK(shifted.display() == "10.1");
  CHECK(shifted.signed_value() == doctest::Approx(10.0513).epsilon(1e-4));
}

TEST_CASE("edd display rounds halves away from zero") {
  const mpfr_prec_t bits = 128;
  CHECK((EddResult{Real(Q("16.25"), bits), Sign::plus}.display() == "16.3"));
  CHECK((EddResult{Real(Q("16.25"), bits), Sign::minus}.display() == "-16.3"));
  CHECK((EddResult{Real(Q("16.249"), bits), Sign::plus}.display() == "16.2"));
  CHECK((EddResult{Real(Q("8.5"), bits), Sign::plus}.display(0) == "9"));
}

TEST_CASE("edd refuses results the reference cannot certify") {
  const PrecisionContext coarse{40, 20};
  CHECK_THROWS_AS(edd({Family::laplace, 8}, Rational(10000), coarse), PrecisionError);
  CHECK_NOTHROW(edd({Family::laplace, 1}, Rational(100), coarse));
}

TEST_CASE("doubling the working precision leaves edd and sign unchanged") {
  const PrecisionContext base;
  const PrecisionContext doubled = PrecisionContext::with_working_digits(2 * base.working_digits);
  const ApproximationEvaluator evaluator(10);
  for (long x : {100L, 1000L, 10000L}) {
    for (const auto& spec : all_specs()) {
      CAPTURE(to_string(spec.family));
      CAPTURE(spec.order);
      CAPTURE(x);
      const EddResult a = evaluator.edd(spec, Rational(x), base);
      const EddResult b = evaluator.edd(spec, Rational(x), doubled);
      CHECK(abs(a.value - b.value) < ten_to(-6, doubled.bits()));
      CHECK(a.sign == b.sign);
    }
  }
}

TEST_CASE("edd grows with x at every fixed order") {
  const ApproximationEvaluator evaluator(10);
  for (const auto& spec : all_specs()) {
    CAPTURE(to_string(spec.family));
    CAPTURE(spec.order);
    const Real e100 = evaluator.edd(spec, Rational(100)).value;
    const Real e1000 = evaluator.edd(spec, Rational(1000)).value;
    const Real e10000 = evaluator.edd(spec, Rational(10000)).value;
    CHECK(e100 < e1000);
    CHECK(e1000 < e10000);
  }
}

TEST_CASE("a shared evaluator gives identical results across threads") {
  const ApproximationEvaluator evaluator(8);
  const std::vector<ApproximationSpec> specs = all_specs();
  std::vector<std::string> serial;
  for (const auto& spec : specs) {
    if (spec.order <= 8) serial.push_back(evaluator.edd(spec, Rational(1000)).value.to_fixed(40));
  }
  std::vector<std::string> parallel(serial.size());
  std::vector<std::thread> threads;
  std::size_t slot = 0;
  for (const auto& spec : specs) {
    if (spec.order > 8) continue;
    threads.emplace_back([&, spec, slot] { parallel[slot] = evaluator.edd(spec, Rational(1000)).value.to_fixed(40); });
    ++slot;
  }
  for (auto& t : threads) t.join();
  CHECK(parallel == serial);
}

TEST_CASE("small arguments still evaluate") {
  const EddResult smoke = edd({Family::laplace, 1}, Rational(1));
  CHECK(smoke.value.to_double() > 2.0);
  CHECK(smoke.value.to_double() < 4.0);
  CHECK(smoke.sign == Sign::minus);
}
