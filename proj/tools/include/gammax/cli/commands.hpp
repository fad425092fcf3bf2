#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gammax/cli/output.hpp"
#include "gammax/precision_eval.hpp"
#include "gammax/rational.hpp"

namespace gammax::cli {

/// Settings shared by every subcommand.
struct CliConfig {
  PrecisionContext precision;
  unsigned max_order = 60;  ///< largest coefficient index `coeffs` will generate
  unsigned max_exact = 7;   ///< largest M for exact pair solving
  bool float_mode = false;  ///< allow the MPFR pair recurrence beyond max_exact
};

enum class PairMode { exact, decimal };

PairMode parse_pair_mode(std::string_view name);

/// Families accepted by `coeffs`.
const std::vector<std::string_view>& coefficient_families();

OutputDocument cmd_coeffs(std::string_view family, unsigned order, const CliConfig& config);
OutputDocument cmd_pairs(unsigned max_index, PairMode mode, const CliConfig& config);
OutputDocument cmd_table1(const CliConfig& config);
OutputDocument cmd_table2(const CliConfig& config);
OutputDocument cmd_conjecture(unsigned max_index, unsigned digits, const CliConfig& config);
OutputDocument cmd_eval(std::string_view family, unsigned order, const Rational& x, unsigned digits,
                        const CliConfig& config);

/// One evaluated table cell.
struct EddCell {
  Family family;
  long x;
  unsigned order;
  EddResult result;
};

/// Evaluates every (family, x, order) combination that is valid for the family.
/// Rows run concurrently; the result is ordered by (x, family, order) regardless of scheduling.
std::vector<EddCell> compute_edd_grid(const std::vector<Family>& families, const std::vector<long>& xs,
                                      const std::vector<unsigned>& orders, const PrecisionContext& ctx);

/// Grid behind table1: stirling, laplace, ramanujan, mortici, nemes_shifted at x = 100, 1000, 10000, orders 1..8.
std::vector<EddCell> table1_grid(const PrecisionContext& ctx);
/// Grid behind table2: nemes_even at x = 100, 1000, 10000, orders 2, 4, ..., 10.
std::vector<EddCell> table2_grid(const PrecisionContext& ctx);

}  // namespace gammax::cli
