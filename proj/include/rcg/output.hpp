#pragma once

// Output envelope shared by every CLI subcommand: one schema, three
// renderers (aligned table, CSV, JSON). Rendering is deterministic — the
// envelope's contents fully determine the bytes produced.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rcg/errors.hpp"

namespace rcg {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr int kWireDigits = 12;   // csv and json significant digits
inline constexpr int kTableDigits = 6;   // human-facing table digits

using Cell = std::variant<double, std::string>;

struct OutputEnvelope {
  std::string command;
  std::vector<std::pair<std::string, Cell>> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> diagnostics;
};

enum class OutputFormat { table, csv, json };

// Accepts "table", "csv", "json"; DomainError otherwise.
OutputFormat parse_format(const std::string& name);

// %.<digits>g rendering shared by every writer.
std::string format_number(double v, int digits);

// Table and JSON render the whole envelope; CSV renders header plus rows.
std::string render(const OutputEnvelope& env, OutputFormat format);

}  // namespace rcg
