#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tauhh {

struct DimRow {
  std::string invariant;
  std::size_t degree = 0;
  std::size_t dimension = 0;

  friend bool operator==(const DimRow&, const DimRow&) = default;
};

struct DimReport {
  std::vector<DimRow> rows;
  std::vector<std::string> notes;

  void add(const std::string& invariant, std::size_t degree, std::size_t dimension) {
    rows.push_back({invariant, degree, dimension});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

enum class Format { Table, Json, Csv };

/// Throws std::invalid_argument on anything but table, json or csv.
Format parse_format(const std::string& name);

/// Table: aligned invariant/degree/dimension columns, then "# " notes.
/// JSON: {"rows": [{"invariant", "degree", "dimension"}...], "notes": [...]}.
/// CSV: header line and rows; notes are dropped.
std::string render(const DimReport& report, Format format);

/// Inverse of the JSON rendering, for round-trip checks.
DimReport parse_json_report(const std::string& text);

}  // namespace tauhh
