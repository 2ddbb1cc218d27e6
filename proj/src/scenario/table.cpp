// SPDX-License-Identifier: Apache-2.0
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ergochain/scenario.hpp"

namespace ergochain::scenario {

void Table::add(std::initializer_list<std::pair<std::string_view, Cell>> cells) {
  std::vector<Cell> row(columns.size());
  for (const auto& [name, value] : cells) {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) fail(ErrorKind::Misuse, "unknown column '" + std::string(name) + "'");
    row[static_cast<std::size_t>(it - columns.begin())] = value;
  }
  rows.push_back(std::move(row));
}

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return quote_csv(v); }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += quote_csv(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table, Kind kind, const std::string& config_hash) {
  using nlohmann::json;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& cell = row[i];
      const std::string& name = table.columns[i];
      if (std::holds_alternative<long long>(cell)) {
        obj[name] = std::get<long long>(cell);
      } else if (std::holds_alternative<double>(cell)) {
        const double v = std::get<double>(cell);
        obj[name] = std::isfinite(v) ? json(v == 0.0 ? 0.0 : v) : json(nullptr);
      } else if (std::holds_alternative<std::string>(cell)) {
        obj[name] = std::get<std::string>(cell);
      }
    }
    rows.push_back(std::move(obj));
  }
  json doc = {{"scenario", std::string(kind_name(kind))},
              {"configHash", config_hash},
              {"columns", table.columns},
              {"rows", std::move(rows)}};
  return doc.dump(1) + "\n";
}

}  // namespace ergochain::scenario
