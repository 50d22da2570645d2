#pragma once
// Row tables written as RFC-4180 CSV or as a JSON array of objects.
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace nwloc::cli {

using Cell = std::variant<std::string, double, long long, bool>;

/// %.17g; non-finite values become "nan" / "inf" in CSV and null in JSON.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + '"';
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

  void write_csv(std::ostream &os) const {
    for (std::size_t c = 0; c < columns.size(); ++c)
      os << (c ? "," : "") << csv_field(columns[c]);
    os << "\r\n";
    for (const auto &row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c)
          os << ',';
        std::visit(
            [&](const auto &v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, std::string>)
                os << csv_field(v);
              else if constexpr (std::is_same_v<T, double>)
                os << format_number(v);
              else if constexpr (std::is_same_v<T, bool>)
                os << (v ? "true" : "false");
              else
                os << v;
            },
            row[c]);
      }
      os << "\r\n";
    }
  }

  // Numbers are emitted by hand so that every value keeps 17 digits.
  void write_json(std::ostream &os) const {
    os << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      os << (r ? ",\n  {" : "\n  {");
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        os << (c ? ", " : "") << nlohmann::json(columns[c]).dump() << ": ";
        std::visit(
            [&](const auto &v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, std::string>)
                os << nlohmann::json(v).dump();
              else if constexpr (std::is_same_v<T, double>)
                os << (std::isfinite(v) ? format_number(v) : std::string("null"));
              else if constexpr (std::is_same_v<T, bool>)
                os << (v ? "true" : "false");
              else
                os << v;
            },
            rows[r][c]);
      }
      os << "}";
    }
    os << (rows.empty() ? "]\n" : "\n]\n");
  }
};

} // namespace nwloc::cli
