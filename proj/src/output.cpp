#include "rcg/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace rcg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string cell_text(const Cell& cell, int digits) {
  if (const double* num = std::get_if<double>(&cell)) {
    return format_number(*num, digits);
  }
  return std::get<std::string>(cell);
}

// RFC-4180-style quoting: wrap when a delimiter, quote, or newline appears.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string render_csv(const OutputEnvelope& env) {
  std::ostringstream out;
  for (std::size_t i = 0; i < env.columns.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(env.columns[i]);
  }
  out << '\n';
  for (const auto& row : env.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(cell_text(row[i], kWireDigits));
    }
    out << '\n';
  }
  return out.str();
}

ordered_json json_cell(const Cell& cell) {
  if (const double* num = std::get_if<double>(&cell)) {
    if (!std::isfinite(*num)) return cell_text(cell, kWireDigits);  // JSON has no inf/nan
    // Reparse the 12-digit rendering so the dumped number carries exactly
    // the digits the other formats show.
    return ordered_json::parse(format_number(*num, kWireDigits));
  }
  return std::get<std::string>(cell);
}

std::string render_json(const OutputEnvelope& env) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = env.command;
  ordered_json inputs = ordered_json::object();
  for (const auto& [key, value] : env.inputs) inputs[key] = json_cell(value);
  doc["inputs"] = inputs;
  // Rows render as records keyed by column name; the column list itself is
  // implied by the record keys, in order.
  ordered_json rows = ordered_json::array();
  for (const auto& row : env.rows) {
    ordered_json record = ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < env.columns.size(); ++i) {
      record[env.columns[i]] = json_cell(row[i]);
    }
    rows.push_back(record);
  }
  doc["rows"] = rows;
  ordered_json diag = ordered_json::object();
  for (const auto& [key, value] : env.diagnostics) diag[key] = json_cell(value);
  doc["diagnostics"] = diag;
  return doc.dump(2) + "\n";
}

std::string render_table(const OutputEnvelope& env) {
  std::ostringstream out;
  out << "command: " << env.command << '\n';
  if (!env.inputs.empty()) {
    out << "inputs:";
    for (const auto& [key, value] : env.inputs) {
      out << ' ' << key << '=' << cell_text(value, kTableDigits);
    }
    out << '\n';
  }
  out << '\n';

  std::vector<std::size_t> width(env.columns.size());
  std::vector<std::vector<std::string>> cells;
  cells.reserve(env.rows.size());
  for (std::size_t i = 0; i < env.columns.size(); ++i) width[i] = env.columns[i].size();
  for (const auto& row : env.rows) {
    std::vector<std::string> line;
    line.reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i], kTableDigits));
      if (i < width.size()) width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  for (std::size_t i = 0; i < env.columns.size(); ++i) {
    if (i) out << "  ";
    out << env.columns[i] << std::string(width[i] - env.columns[i].size(), ' ');
  }
  out << '\n';
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << line[i];
      if (i < width.size() && i + 1 < line.size()) {
        out << std::string(width[i] - std::min(width[i], line[i].size()), ' ');
      }
    }
    out << '\n';
  }

  if (!env.diagnostics.empty()) {
    out << '\n' << "diagnostics:";
    for (const auto& [key, value] : env.diagnostics) {
      out << ' ' << key << '=' << cell_text(value, kTableDigits);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw DomainError("unknown output format: " + name);
}

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

std::string render(const OutputEnvelope& env, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return render_csv(env);
    case OutputFormat::json:
      return render_json(env);
    case OutputFormat::table:
      break;
  }
  return render_table(env);
}

}  // namespace rcg
