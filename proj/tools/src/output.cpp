#include "gammax/cli/output.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "gammax/errors.hpp"

namespace gammax::cli {

namespace {

std::string csv_field(const Cell& cell) {
  const bool quote = (cell.kind == CellKind::exact && cell.text.find('/') != std::string::npos) ||
                     cell.text.find_first_of(",\"\n") != std::string::npos;
  if (!quote) return cell.text;
  std::string out = "\"";
  for (char c : cell.text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "markdown" || name == "md") return Format::markdown;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InvalidArgumentError("unknown output format '" + std::string(name) + "'");
}

std::string OutputDocument::render(Format format) const {
  switch (format) {
    case Format::markdown:
      return render_markdown(*this);
    case Format::csv:
      return render_csv(*this);
    case Format::json:
      return render_json(*this);
  }
  return {};
}

std::string render_markdown(const OutputDocument& doc) {
  std::vector<std::size_t> width(doc.headers.size(), 3);
  for (std::size_t c = 0; c < doc.headers.size(); ++c) width[c] = std::max(width[c], doc.headers[c].size());
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].text.size());
  }

  std::ostringstream out;
  auto line = [&](auto&& text_at) {
    out << '|';
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string text = text_at(c);
      out << ' ' << text << std::string(width[c] - text.size(), ' ') << " |";
    }
    out << '\n';
  };
  line([&](std::size_t c) { return doc.headers[c]; });
  line([&](std::size_t c) { return std::string(width[c], '-'); });
  for (const auto& row : doc.rows) {
    line([&](std::size_t c) { return c < row.size() ? row[c].text : std::string(); });
  }
  if (!doc.notes.empty()) {
    out << '\n';
    for (const auto& note : doc.notes) out << "> " << note << '\n';
  }
  return out.str();
}

std::string render_csv(const OutputDocument& doc) {
  std::ostringstream out;
  for (std::size_t c = 0; c < doc.headers.size(); ++c) {
    if (c) out << ',';
    out << csv_field(Cell::of_text(doc.headers[c]));
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << csv_field(row[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const OutputDocument& doc) {
  nlohmann::ordered_json root;
  root["command"] = doc.command;
  root["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : doc.params) root["params"][key] = value;
  root["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < doc.headers.size(); ++c) {
      if (row[c].kind == CellKind::integer) {
        record[doc.headers[c]] = std::stol(row[c].text);
      } else {
        record[doc.headers[c]] = row[c].text;
      }
    }
    root["rows"].push_back(std::move(record));
  }
  if (!doc.notes.empty()) root["notes"] = doc.notes;
  return root.dump(2) + "\n";
}

}  // namespace gammax::cli
