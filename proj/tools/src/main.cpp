#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "gammax/cli/commands.hpp"
#include "gammax/errors.hpp"

using namespace gammax;
using namespace gammax::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact coefficients and accuracy tables for asymptotic expansions of the Gamma function"};
  app.require_subcommand(1);

  std::string format_name = "markdown";
  unsigned precision = 120;
  std::string out_path;
  CliConfig config;

  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"markdown", "md", "csv", "json"}))
      ->envname("GAMMAX_FORMAT")
      ->capture_default_str();
  app.add_option("--precision", precision, "Working precision in decimal digits (target = precision - 20)")
      ->check(CLI::Range(40u, 100000u))
      ->envname("GAMMAX_PRECISION")
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file instead of standard output");
  app.add_option("--max-order", config.max_order, "Largest coefficient order accepted by 'coeffs'")
      ->envname("GAMMAX_MAX_ORDER")
      ->capture_default_str();
  app.add_option("--max-exact", config.max_exact, "Largest M solved with exact rationals")
      ->envname("GAMMAX_MAX_EXACT")
      ->capture_default_str();
  app.add_flag("--float-mode", config.float_mode, "Continue the pair recurrence in floating point past --max-exact")
      ->envname("GAMMAX_FLOAT_MODE");

  std::string family;
  unsigned order = 0;
  auto* coeffs = app.add_subcommand("coeffs", "Exact coefficients of one expansion");
  coeffs->fallthrough();
  coeffs->add_option("family", family, "Coefficient family")->required();
  coeffs->add_option("order", order, "Highest coefficient index")->required();

  unsigned max_index = 0;
  std::string mode = "exact";
  auto* pairs = app.add_subcommand("pairs", "The (g_m, v_m) pairs of the even-power expansion");
  pairs->fallthrough();
  pairs->add_option("max_index", max_index, "Largest m")->required();
  pairs->add_option("--mode", mode, "exact or decimal")->check(CLI::IsMember({"exact", "decimal"}))->capture_default_str();

  auto* table1 = app.add_subcommand("table1", "Exact decimal digits of five formulas at x = 100, 1000, 10000");
  table1->fallthrough();
  auto* table2 = app.add_subcommand("table2", "Exact decimal digits of the even-power expansion");
  table2->fallthrough();

  unsigned digits = 10;
  auto* conjecture = app.add_subcommand("conjecture", "v_m and their distance from 1/4");
  conjecture->fallthrough();
  conjecture->add_option("max_index", max_index, "Largest m (>= 2)")->required();
  conjecture->add_option("--digits", digits, "Decimal digits to print")->capture_default_str();

  std::string x_text;
  auto* eval = app.add_subcommand("eval", "Log-value, edd and sign of one approximation");
  eval->fallthrough();
  eval->add_option("family", family, "stirling, laplace, ramanujan, mortici, nemes_shifted or nemes_even")->required();
  eval->add_option("order", order, "Truncation order")->required();
  eval->add_option("x", x_text, "Argument: integer, decimal literal or p/q")->required();
  eval->add_option("--digits", digits, "Decimal digits to print")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    config.precision = PrecisionContext::with_working_digits(precision);
    const Format format = parse_format(format_name);

    OutputDocument doc;
    if (*coeffs) {
      doc = cmd_coeffs(family, order, config);
    } else if (*pairs) {
      doc = cmd_pairs(max_index, parse_pair_mode(mode), config);
    } else if (*table1) {
      doc = cmd_table1(config);
    } else if (*table2) {
      doc = cmd_table2(config);
    } else if (*conjecture) {
      doc = cmd_conjecture(max_index, digits, config);
    } else if (*eval) {
      doc = cmd_eval(family, order, Rational::parse(x_text), digits, config);
    }

    const std::string text = doc.render(format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out_path);
      if (!file) {
        std::cerr << "gammax: cannot open " << out_path << " for writing\n";
        return 1;
      }
      file << text;
    }
  } catch (const gammax::Error& e) {
    std::cerr << "gammax: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
