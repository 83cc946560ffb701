#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace hardylab {

using ordered_json = nlohmann::ordered_json;

/// Flat table with a fixed column order. Cells are stored already formatted
/// so the CSV is byte-stable across runs.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// Shortest round-trip decimal for finite values; "nan", "inf", "-inf" otherwise.
std::string format_number(double v);
std::string format_number(std::int64_t v);

std::string to_csv(const Table& t);
/// Array of objects keyed by column name; numeric-looking cells stay numbers.
ordered_json to_json(const Table& t);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = true;
  bool log_y = true;
  std::vector<Series> series;
};

/// Self-contained SVG line plot with axes, ticks and a legend.
std::string to_svg(const Plot& p);

/// Writes `text` to `path`, creating parent directories. Throws
/// std::runtime_error when the file cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

/// Appends one compact JSON line under an advisory exclusive lock.
void append_ledger(const std::filesystem::path& path, const ordered_json& entry);

}  // namespace hardylab
