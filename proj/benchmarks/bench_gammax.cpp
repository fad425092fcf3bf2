#include <benchmark/benchmark.h>

#include "gammax/cli/commands.hpp"
#include "gammax/coefficients.hpp"
#include "gammax/precision_eval.hpp"

using namespace gammax;

static void BM_StirlingLogCoeffs(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stirling_log_coeffs(order));
}
BENCHMARK(BM_StirlingLogCoeffs)->Arg(15)->Arg(30)->Arg(60);

static void BM_GosperBaseCoeffs(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gosper_base_coeffs(order));
}
BENCHMARK(BM_GosperBaseCoeffs)->Arg(15)->Arg(30);

static void BM_NemesShiftedCoeffs(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nemes_shifted_coeffs(order));
}
BENCHMARK(BM_NemesShiftedCoeffs)->Arg(14)->Arg(30);

static void BM_NemesEvenPairsExact(benchmark::State& state) {
  const auto max_index = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nemes_even_pairs(max_index));
}
BENCHMARK(BM_NemesEvenPairsExact)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_NemesEvenPairsNumeric(benchmark::State& state) {
  const auto max_index = static_cast<std::size_t>(state.range(0));
  const PrecisionContext ctx;
  for (auto _ : state) benchmark::DoNotOptimize(nemes_even_pairs_numeric(max_index, ctx.bits()));
}
BENCHMARK(BM_NemesEvenPairsNumeric)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_LogGammaReference(benchmark::State& state) {
  const Rational x(state.range(0));
  const PrecisionContext ctx;
  for (auto _ : state) benchmark::DoNotOptimize(log_gamma_reference(x, ctx));
}
BENCHMARK(BM_LogGammaReference)->Arg(5)->Arg(100)->Arg(10000);

static void BM_EddCell(benchmark::State& state) {
  const ApproximationEvaluator evaluator(8);
  const PrecisionContext ctx;
  const ApproximationSpec spec{Family::nemes_shifted, 8};
  const Rational x(1000);
  for (auto _ : state) benchmark::DoNotOptimize(evaluator.edd(spec, x, ctx));
}
BENCHMARK(BM_EddCell);

static void BM_Table1Grid(benchmark::State& state) {
  const PrecisionContext ctx;
  for (auto _ : state) benchmark::DoNotOptimize(cli::table1_grid(ctx));
}
BENCHMARK(BM_Table1Grid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
