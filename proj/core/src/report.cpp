#include "tauhh/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tauhh {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

std::string table(const DimReport& r) {
  const std::string h1 = "invariant", h2 = "degree", h3 = "dimension";
  std::size_t w1 = h1.size(), w2 = h2.size(), w3 = h3.size();
  for (const auto& row : r.rows) {
    w1 = std::max(w1, row.invariant.size());
    w2 = std::max(w2, std::to_string(row.degree).size());
    w3 = std::max(w3, std::to_string(row.dimension).size());
  }
  std::ostringstream out;
  auto line = [&](const std::string& a, const std::string& b, const std::string& c) {
    out << a << std::string(w1 - a.size() + 2, ' ') << std::string(w2 - b.size(), ' ') << b
        << "  " << std::string(w3 - c.size(), ' ') << c << '\n';
  };
  line(h1, h2, h3);
  for (const auto& row : r.rows) {
    line(row.invariant, std::to_string(row.degree), std::to_string(row.dimension));
  }
  for (const auto& n : r.notes) out << "# " << n << '\n';
  return out.str();
}

std::string csv(const DimReport& r) {
  std::ostringstream out;
  out << "invariant,degree,dimension\n";
  for (const auto& row : r.rows) {
    std::string name = row.invariant;
    if (name.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      name = quoted + "\"";
    }
    out << name << ',' << row.degree << ',' << row.dimension << '\n';
  }
  return out.str();
}

}  // namespace

std::string render(const DimReport& report, Format format) {
  switch (format) {
    case Format::Table:
      return table(report);
    case Format::Csv:
      return csv(report);
    case Format::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"invariant", r.invariant}, {"degree", r.degree}, {"dimension", r.dimension}});
      }
      nlohmann::json doc = {{"rows", rows}, {"notes", report.notes}};
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

DimReport parse_json_report(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  DimReport r;
  for (const auto& row : doc.at("rows")) {
    r.add(row.at("invariant").get<std::string>(), row.at("degree").get<std::size_t>(),
          row.at("dimension").get<std::size_t>());
  }
  for (const auto& n : doc.at("notes")) r.note(n.get<std::string>());
  return r;
}

}  // namespace tauhh
