#include <doctest.h>

#include <cmath>

#include "gammax/coefficients.hpp"
#include "gammax/combinatorics.hpp"
#include "gammax/errors.hpp"
#include "test_support.hpp"

using namespace gammax;
using gammax::test::Q;
using gammax::test::Qs;

namespace {

// Frozen from tests/oracle/freeze_values.py (Python fractions, independent of this library).
const char* const kG4 = "-4284759434575774911609846979826215194955831/6537551148971682670735207568187601674240000000";
const char* const kV4 =
    "80860123458603255630805444585010147762516575686928336165624182491/"
    "323647767690533869415076124526652436423324062606178205163054673650";

// Right-hand side sum_{j<=n/2} binom(-2j, n-2j) g_j v_j^{n-2j}; the j = 0 term is g_0 at n = 0 only.
Rational pair_expansion(const EvenPairSequence& pairs, std::size_t n) {
  Rational sum = n == 0 ? pairs.g(0) : Rational(0);
  for (std::size_t j = 1; 2 * j <= n && j <= pairs.max_index(); ++j) {
    const auto power = static_cast<long>(n - 2 * j);
    sum += binomial_general(Rational(-2 * static_cast<long>(j)), n - 2 * j) * pairs.g(j) * pow(pairs.shift(j), power);
  }
  return sum;
}

double to_double(const Rational& q) { return q.to_double(); }

}  // namespace

TEST_CASE("stirling_log_coeffs") {
  const FormalSeries s = stirling_log_coeffs(6);
  CHECK(s[0] == Rational(0));
  CHECK(s[1] == Q("1/12"));
  CHECK(s[2] == Rational(0));
  CHECK(s[3] == Q("-1/360"));
  CHECK(s[5] == Q("1/1260"));
  CHECK(s[6] == Rational(0));
  CHECK_THROWS_AS(stirling_log_coeffs(0), InvalidArgumentError);
}

TEST_CASE("laplace_coeffs") {
  const FormalSeries a = laplace_coeffs(8);
  CHECK(a[1] == Q("1/12"));
  CHECK(a[2] == Q("1/288"));
  CHECK(a[3] == Q("-139/51840"));
  CHECK(a[4] == Q("-571/2488320"));
  CHECK(a[5] == Q("163879/209018880"));
  CHECK(laplace_coeffs(0) == FormalSeries::one(0));
  CHECK(laplace_coeffs(3) == a.truncated(3));
}

TEST_CASE("ramanujan, karatsuba and mortici radicands") {
  const FormalSeries r = ramanujan_coeffs(4);
  CHECK(r.coefficients()[0] == Rational(1));
  CHECK(r[1] == Q("1/2"));
  CHECK(r[2] == Q("1/8"));
  CHECK(r[3] == Q("1/240"));
  CHECK(ramanujan_coeffs(0) == FormalSeries::one(0));

  const FormalSeries k = karatsuba_coeffs(4);
  CHECK(k.exponent_offset() == 3);
  CHECK(std::vector<Rational>(k.coefficients().begin(), k.coefficients().end()) ==
        Qs({"8", "4", "1", "1/30", "-11/240"}));

  const FormalSeries m = mortici_coeffs(3);
  CHECK(m[1] == Q("1/6"));
  CHECK(m[2] == Q("1/72"));
  CHECK(m[3] == Q("-31/6480"));
  // 2x times the radicand: 2x + 1/3 + 1/(36x) + ...
  const FormalSeries doubled = Rational(2) * FormalSeries({m.coefficients().begin(), m.coefficients().end()}, 1);
  CHECK(doubled[0] == Rational(2));
  CHECK(doubled[1] == Q("1/3"));
  CHECK(doubled[2] == Q("1/36"));
  CHECK(doubled[3] == Q("-31/3240"));
}

TEST_CASE("gosper_base_coeffs") {
  const GosperBaseSeries c = gosper_base_coeffs(5);
  CHECK(c.c[0] == Rational(1));
  CHECK(c.c[1] == Rational(0));
  CHECK(c.c[2] == Q("1/144"));
  CHECK(c.c[2] == Q("1/288") - Q("1/144") + Q("3/8") / Rational(36));
}

TEST_CASE("gosper_base_coeffs: double sum and series pipeline agree") {
  for (std::size_t n : {0u, 1u, 2u, 7u, 20u, 31u}) {
    CHECK(gosper_base_coeffs(n).c == gosper_base_coeffs_via_series(n).c);
  }
}

TEST_CASE("nemes_shifted_coeffs reproduce the G_k table") {
  const ShiftedCoeffs G = nemes_shifted_coeffs(14);
  const std::vector<Rational> expected = Qs({
      "1", "0", "1/144", "-1/12960", "-257/207360", "-53/2612736", "5741173/9405849600", "37529/18811699200",
      "-710165119/1083553873920", "-3376971533/4022693756928000", "360182239526821/300361133850624000",
      "104939254406053/210853515963138048000", "-508096766056991140541/151814531493459394560000",
      "-70637580369737593/151814531493459394560000",
      "289375690552473442964467/21861292535058152816640000"});
  CHECK(G.G == expected);
  CHECK(ShiftedCoeffs::shift() == Q("1/4"));
  CHECK(ShiftedCoeffs::base_shift() == Q("1/6"));
}

TEST_CASE("forward expansion of the G_k reproduces the Gosper base series") {
  for (std::size_t K : {0u, 1u, 5u, 14u, 24u}) {
    const ShiftedCoeffs G = nemes_shifted_coeffs(K);
    const FormalSeries forward = expand_shifted(G.as_shifted_series());
    CHECK(forward == gosper_base_coeffs(K).as_series());
  }
}

TEST_CASE("nemes_even_pairs exact values") {
  const EvenPairSequence pairs = nemes_even_pairs(4);
  CHECK(pairs.max_index() == 4);
  CHECK(pairs.g(0) == Rational(1));
  CHECK(pairs.g(1) == Q("1/144"));
  CHECK(pairs.shift(1) == Q("23/90"));
  CHECK(pairs.g(2) == Q("-3857/3110400"));
  CHECK(pairs.shift(2) == Q("1792627/7289730"));
  CHECK(pairs.g(3) == Q("20932906335329/34283052002304000"));
  CHECK(pairs.shift(3) == Q("570984637359867601981/2288928529497568067550"));
  CHECK(pairs.g(4) == Q(kG4));
  CHECK(pairs.shift(4) == Q(kV4));
  CHECK(to_double(pairs.g(4)) == doctest::Approx(-0.000655407405149).epsilon(1e-12));
  CHECK(to_double(pairs.shift(4)) == doctest::Approx(0.249839892410196).epsilon(1e-12));
  CHECK(pairs.shift_values().size() == 4);
}

TEST_CASE("v_0 is undefined") {
  const EvenPairSequence pairs = nemes_even_pairs(2);
  CHECK_THROWS_AS(pairs.shift(0), UndefinedShiftError);
  const EvenPairSequence trivial = nemes_even_pairs(0);
  CHECK(trivial.g_values() == Qs({"1"}));
  CHECK(trivial.shift_values().empty());
}

TEST_CASE("pair solving reports a vanishing g_m as a distinct error") {
  GosperBaseSeries degenerate{Qs({"1", "0", "0", "1/5", "1", "2"})};
  try {
    solve_even_pairs(degenerate, 2);
    FAIL("expected DegeneratePairError");
  } catch (const DegeneratePairError& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(solve_even_pairs(degenerate, 3), InvalidArgumentError);
}

TEST_CASE("computed pairs satisfy the two-sided recurrence exactly") {
  const std::size_t M = 7;
  const EvenPairSequence pairs = nemes_even_pairs(M);
  const GosperBaseSeries base = gosper_base_coeffs(2 * M + 1);
  for (std::size_t n = 0; n <= 2 * M + 1; ++n) {
    CAPTURE(n);
    CHECK(base.c[n] == pair_expansion(pairs, n));
  }
}

TEST_CASE("shifts approach 1/4 monotonically on the computed range") {
  const EvenPairSequence pairs = nemes_even_pairs(7);
  const Rational quarter(1, 4);
  for (std::size_t m = 2; m < 7; ++m) {
    CAPTURE(m);
    CHECK(abs(pairs.shift(m + 1) - quarter) < abs(pairs.shift(m) - quarter));
  }
  CHECK(abs(pairs.shift(7) - quarter) < Q("4/1000000"));
}

TEST_CASE("floating pair recurrence tracks the exact one") {
  const std::size_t M = 7;
  const mpfr_prec_t bits = bits_for_digits(60);
  const EvenPairSequence exact = nemes_even_pairs(M);
  const NumericPairSequence numeric = nemes_even_pairs_numeric(M, bits);
  REQUIRE(numeric.max_index() == M);
  const Real tolerance = pow(Real(10, bits), -50);
  for (std::size_t m = 1; m <= M; ++m) {
    CHECK(abs(numeric.g[m] - Real(exact.g(m), bits)) < tolerance);
    CHECK(abs(numeric.v[m - 1] - Real(exact.shift(m), bits)) < tolerance);
  }
  // Past the exact range the recurrence keeps going.
  const NumericPairSequence longer = nemes_even_pairs_numeric(10, bits);
  const Real quarter(Rational(1, 4), bits);
  CHECK(abs(longer.v[9] - quarter) < abs(longer.v[6] - quarter));
}

TEST_CASE("central binomial series") {
  const FormalSeries T = central_binomial_coeffs(4);
  CHECK(T.coefficients()[0] == Rational(1));
  CHECK(T[1] == Q("-1/8"));
  CHECK(T[2] == Q("1/128"));
  CHECK(T[3] == Q("5/1024"));
  CHECK(T[4] == Q("-21/32768"));

  const ShiftedSeries shifted = central_binomial_shifted(10);
  CHECK(shifted.shift == Q("1/4"));
  CHECK(shifted.coefficients[2] == Q("-1/64"));
  CHECK(shifted.coefficients[4] == Q("21/8192"));
  for (std::size_t k = 1; k <= 10; k += 2) {
    CAPTURE(k);
    CHECK(shifted.coefficients[k].is_zero());
  }
}

TEST_CASE("central binomial series matches exact binomials") {
  // binom(2n, n) sqrt(pi n) / 4^n ~ T(n); at n = 50 six terms exceed double precision.
  const FormalSeries T = central_binomial_coeffs(6);
  double sum = 0.0;
  for (std::size_t k = 0; k <= 6; ++k) sum += to_double(T[k]) / std::pow(50.0, static_cast<double>(k));
  mpz_class central;
  mpz_bin_uiui(central.get_mpz_t(), 100, 50);
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, 50);
  const double ratio = Rational(central, four_pow).to_double() * std::sqrt(std::acos(-1.0) * 50.0);
  CHECK(ratio == doctest::Approx(sum).epsilon(1e-14));
}
