#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammax/rational.hpp"

namespace gammax::cli {

enum class Format { markdown, csv, json };

Format parse_format(std::string_view name);

enum class CellKind { text, integer, exact, decimal };

/// One rendered value. Exact rationals stay "p/q" strings in every format.
struct Cell {
  CellKind kind = CellKind::text;
  std::string text;

  static Cell of_text(std::string value) { return {CellKind::text, std::move(value)}; }
  static Cell of_integer(long value) { return {CellKind::integer, std::to_string(value)}; }
  static Cell of_exact(const Rational& value) { return {CellKind::exact, value.to_string()}; }
  static Cell of_decimal(std::string value) { return {CellKind::decimal, std::move(value)}; }
  static Cell empty() { return {CellKind::text, {}}; }

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct OutputDocument {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  std::string render(Format format) const;
};

std::string render_markdown(const OutputDocument& doc);
/// Comma separated, header row first; "p/q" values are quoted.
std::string render_csv(const OutputDocument& doc);
/// {"command": ..., "params": {...}, "rows": [{header: value}], "notes": [...]}.
/// Integers are JSON numbers; everything else is a string.
std::string render_json(const OutputDocument& doc);

}  // namespace gammax::cli
