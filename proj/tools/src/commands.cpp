#include "gammax/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <string>

#include "gammax/coefficients.hpp"
#include "gammax/errors.hpp"

namespace gammax::cli {

namespace {

constexpr int kPairDecimals = 15;
const std::vector<long> kTableArguments{100, 1000, 10000};

std::string_view table_label(Family family) {
  switch (family) {
    case Family::stirling:
      return "Stirling";
    case Family::laplace:
      return "Laplace";
    case Family::ramanujan:
      return "Ramanujan";
    case Family::mortici:
      return "Mortici";
    case Family::nemes_shifted:
      return "New";
    case Family::nemes_even:
      return "Special";
  }
  return "?";
}

bool order_applies(Family family, unsigned order) {
  return !((family == Family::stirling || family == Family::nemes_even) && order % 2 != 0);
}

OutputDocument coefficient_document(std::string_view family, unsigned order, std::span<const Rational> values) {
  OutputDocument doc;
  doc.command = "coeffs";
  doc.params = {{"family", std::string(family)}, {"order", std::to_string(order)}};
  doc.headers = {"n", "coefficient"};
  for (std::size_t n = 0; n < values.size(); ++n) {
    doc.rows.push_back({Cell::of_integer(static_cast<long>(n)), Cell::of_exact(values[n])});
  }
  return doc;
}

std::string precision_param(const CliConfig& config) { return std::to_string(config.precision.working_digits); }

OutputDocument table_document(std::string command, const std::vector<Family>& families,
                              const std::vector<unsigned>& orders, const std::vector<EddCell>& cells,
                              const CliConfig& config) {
  OutputDocument doc;
  doc.command = std::move(command);
  doc.params = {{"precision", precision_param(config)}};
  doc.headers = {"formula", "x"};
  for (unsigned order : orders) doc.headers.push_back("(" + std::to_string(order) + ")");

  std::map<std::tuple<long, Family, unsigned>, const EddCell*> lookup;
  for (const auto& cell : cells) lookup[{cell.x, cell.family, cell.order}] = &cell;

  for (long x : kTableArguments) {
    for (Family family : families) {
      std::vector<Cell> row{Cell::of_text(std::string(table_label(family))), Cell::of_integer(x)};
      for (unsigned order : orders) {
        auto it = lookup.find({x, family, order});
        row.push_back(it == lookup.end() ? Cell::empty() : Cell::of_decimal(it->second->result.display(1)));
      }
      doc.rows.push_back(std::move(row));
    }
  }
  return doc;
}

}  // namespace

PairMode parse_pair_mode(std::string_view name) {
  if (name == "exact") return PairMode::exact;
  if (name == "decimal") return PairMode::decimal;
  throw InvalidArgumentError("unknown pair mode '" + std::string(name) + "'");
}

const std::vector<std::string_view>& coefficient_families() {
  static const std::vector<std::string_view> names{
      "laplace",     "stirling_log",  "ramanujan",        "karatsuba",
      "mortici",     "gosper_base",   "nemes_shifted",    "central_binomial",
      "central_binomial_shifted"};
  return names;
}

OutputDocument cmd_coeffs(std::string_view family, unsigned order, const CliConfig& config) {
  const auto& names = coefficient_families();
  if (std::find(names.begin(), names.end(), family) == names.end()) {
    throw InvalidArgumentError("unknown coefficient family '" + std::string(family) + "'");
  }
  if (order > config.max_order) {
    throw InvalidArgumentError("order " + std::to_string(order) + " exceeds the configured maximum of " +
                               std::to_string(config.max_order));
  }

  if (family == "laplace") return coefficient_document(family, order, laplace_coeffs(order).coefficients());
  if (family == "stirling_log") {
    if (order < 1) throw InvalidArgumentError("stirling_log needs order >= 1");
    return coefficient_document(family, order, stirling_log_coeffs(order).coefficients());
  }
  if (family == "ramanujan") return coefficient_document(family, order, ramanujan_coeffs(order).coefficients());
  if (family == "karatsuba") {
    const FormalSeries series = karatsuba_coeffs(order);
    OutputDocument doc = coefficient_document(family, order, series.coefficients());
    doc.notes.push_back("coefficient n multiplies x^(" + std::to_string(series.exponent_offset()) + "-n)");
    return doc;
  }
  if (family == "mortici") return coefficient_document(family, order, mortici_coeffs(order).coefficients());
  if (family == "gosper_base") return coefficient_document(family, order, gosper_base_coeffs(order).c);
  if (family == "nemes_shifted") {
    OutputDocument doc = coefficient_document(family, order, nemes_shifted_coeffs(order).G);
    doc.notes.push_back("coefficient n multiplies (x+1/4)^(-n)");
    return doc;
  }
  if (family == "central_binomial") {
    return coefficient_document(family, order, central_binomial_coeffs(order).coefficients());
  }
  const ShiftedSeries shifted = central_binomial_shifted(order);
  OutputDocument doc = coefficient_document(family, order, shifted.coefficients);
  doc.notes.push_back("coefficient k multiplies (n+1/4)^(-k)");
  return doc;
}

OutputDocument cmd_pairs(unsigned max_index, PairMode mode, const CliConfig& config) {
  OutputDocument doc;
  doc.command = "pairs";
  doc.params = {{"max_index", std::to_string(max_index)}, {"mode", mode == PairMode::exact ? "exact" : "decimal"}};
  doc.headers = {"m", "g", "v"};

  const bool exact_fits = max_index <= config.max_exact;
  if (mode == PairMode::exact && !exact_fits) {
    throw InvalidArgumentError("exact pair solving is limited to M <= " + std::to_string(config.max_exact));
  }
  if (!exact_fits && !config.float_mode) {
    throw InvalidArgumentError("M = " + std::to_string(max_index) + " needs --float-mode");
  }

  if (exact_fits) {
    const EvenPairSequence pairs = nemes_even_pairs(max_index);
    const mpfr_prec_t bits = config.precision.bits();
    for (std::size_t m = 0; m <= max_index; ++m) {
      std::vector<Cell> row{Cell::of_integer(static_cast<long>(m))};
      if (mode == PairMode::exact) {
        row.push_back(Cell::of_exact(pairs.g(m)));
        row.push_back(m == 0 ? Cell::empty() : Cell::of_exact(pairs.shift(m)));
      } else {
        row.push_back(Cell::of_decimal(Real(pairs.g(m), bits).to_fixed(kPairDecimals)));
        row.push_back(m == 0 ? Cell::empty() : Cell::of_decimal(Real(pairs.shift(m), bits).to_fixed(kPairDecimals)));
      }
      doc.rows.push_back(std::move(row));
    }
    return doc;
  }

  const NumericPairSequence pairs = nemes_even_pairs_numeric(max_index, config.precision.bits());
  for (std::size_t m = 0; m <= max_index; ++m) {
    doc.rows.push_back({Cell::of_integer(static_cast<long>(m)), Cell::of_decimal(pairs.g[m].to_fixed(kPairDecimals)),
                        m == 0 ? Cell::empty() : Cell::of_decimal(pairs.v[m - 1].to_fixed(kPairDecimals))});
  }
  doc.notes.push_back("computed with the floating-point pair recurrence");
  return doc;
}

std::vector<EddCell> compute_edd_grid(const std::vector<Family>& families, const std::vector<long>& xs,
                                      const std::vector<unsigned>& orders, const PrecisionContext& ctx) {
  ctx.validate();
  const unsigned max_order = orders.empty() ? 1 : *std::max_element(orders.begin(), orders.end());
  const ApproximationEvaluator evaluator(max_order);

  std::map<long, Real> log_gamma;
  for (long x : xs) log_gamma.emplace(x, log_gamma_reference(Rational(x), ctx));

  std::vector<std::future<std::vector<EddCell>>> rows;
  for (long x : xs) {
    for (Family family : families) {
      rows.push_back(std::async(std::launch::async, [&, x, family] {
        std::vector<EddCell> out;
        for (unsigned order : orders) {
          if (!order_applies(family, order)) continue;
          const ApproximationSpec spec{family, order};
          out.push_back({family, x, order, evaluator.edd(spec, Rational(x), log_gamma.at(x), ctx)});
        }
        return out;
      }));
    }
  }

  std::vector<EddCell> cells;
  for (auto& row : rows) {
    for (auto& cell : row.get()) cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<EddCell> table1_grid(const PrecisionContext& ctx) {
  return compute_edd_grid({Family::stirling, Family::laplace, Family::ramanujan, Family::mortici, Family::nemes_shifted},
                          kTableArguments, {1, 2, 3, 4, 5, 6, 7, 8}, ctx);
}

std::vector<EddCell> table2_grid(const PrecisionContext& ctx) {
  return compute_edd_grid({Family::nemes_even}, kTableArguments, {2, 4, 6, 8, 10}, ctx);
}

OutputDocument cmd_table1(const CliConfig& config) {
  const std::vector<Family> families{Family::stirling, Family::laplace, Family::ramanujan, Family::mortici,
                                     Family::nemes_shifted};
  OutputDocument doc = table_document("table1", families, {1, 2, 3, 4, 5, 6, 7, 8}, table1_grid(config.precision), config);
  doc.notes.push_back("exact decimal digits; '-' marks an approximation below Gamma(x+1)");
  return doc;
}

OutputDocument cmd_table2(const CliConfig& config) {
  OutputDocument doc = table_document("table2", {Family::nemes_even}, {2, 4, 6, 8, 10}, table2_grid(config.precision), config);
  doc.headers.push_back("flags");
  for (auto& row : doc.rows) {
    row.push_back(row[1].text == "10000" ? Cell::of_text("(10)") : Cell::empty());
  }
  doc.notes.push_back("exact decimal digits; '-' marks an approximation below Gamma(x+1)");
  doc.notes.push_back("flagged cells report the computed sign; compare them by magnitude only");
  return doc;
}

OutputDocument cmd_conjecture(unsigned max_index, unsigned digits, const CliConfig& config) {
  if (max_index < 2) throw InvalidArgumentError("conjecture needs M >= 2");
  if (max_index > config.max_exact && !config.float_mode) {
    throw InvalidArgumentError("M = " + std::to_string(max_index) + " is beyond exact range; pass --float-mode");
  }
  const mpfr_prec_t bits = config.precision.bits();

  std::vector<Real> shifts;
  if (max_index <= config.max_exact) {
    const EvenPairSequence pairs = nemes_even_pairs(max_index);
    for (const auto& v : pairs.shift_values()) shifts.emplace_back(v, bits);
  } else {
    shifts = nemes_even_pairs_numeric(max_index, bits).v;
  }

  OutputDocument doc;
  doc.command = "conjecture";
  doc.params = {{"max_index", std::to_string(max_index)}, {"digits", std::to_string(digits)}};
  doc.headers = {"m", "v", "distance"};
  const Real quarter(Rational(1, 4), bits);
  for (std::size_t m = 1; m <= shifts.size(); ++m) {
    const Real distance = abs(shifts[m - 1] - quarter);
    doc.rows.push_back({Cell::of_integer(static_cast<long>(m)),
                        Cell::of_decimal(shifts[m - 1].to_fixed(static_cast<int>(digits))),
                        Cell::of_decimal(distance.to_scientific(static_cast<int>(digits)))});
  }
  doc.notes.push_back("distance = |v_m - 1/4|");
  return doc;
}

OutputDocument cmd_eval(std::string_view family, unsigned order, const Rational& x, unsigned digits,
                        const CliConfig& config) {
  const ApproximationSpec spec{parse_family(family), order};
  spec.validate();
  const ApproximationEvaluator evaluator(order);
  const Real log_gamma = log_gamma_reference(x, config.precision);
  const Real log_value = evaluator.log_approximation(spec, x, config.precision);
  const EddResult result = evaluator.edd(spec, x, log_gamma, config.precision);

  OutputDocument doc;
  doc.command = "eval";
  doc.params = {{"family", std::string(family)},
                {"order", std::to_string(order)},
                {"x", x.to_string()},
                {"digits", std::to_string(digits)},
                {"precision", precision_param(config)}};
  doc.headers = {"family", "order", "x", "log_approximation", "log_gamma", "edd", "edd_full", "sign"};
  const int d = static_cast<int>(digits);
  doc.rows.push_back({Cell::of_text(std::string(family)), Cell::of_integer(order), Cell::of_exact(x),
                      Cell::of_decimal(log_value.to_fixed(d)), Cell::of_decimal(log_gamma.to_fixed(d)),
                      Cell::of_decimal(result.display(1)), Cell::of_decimal(result.value.to_fixed(d)),
                      Cell::of_text(result.sign == Sign::minus ? "-" : "+")});
  return doc;
}

}  // namespace gammax::cli
