#include "krun/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace krun {

namespace {

struct Field {
  std::string text;
  bool quoted = false;
};

std::vector<std::vector<Field>> parse_fields(std::string_view s) {
  std::vector<std::vector<Field>> rows;
  std::vector<Field> row;
  Field cur;
  bool in_quotes = false;
  bool at_field_start = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_quotes) {
      if (c != '"') {
        cur.text += c;
      } else if (i + 1 < s.size() && s[i + 1] == '"') {
        cur.text += '"';
        ++i;
      } else {
        in_quotes = false;
      }
      continue;
    }
    if (c == '"') {
      if (!at_field_start) throw MalformedCsv("quote inside an unquoted field");
      in_quotes = true;
      cur.quoted = true;
      at_field_start = false;
    } else if (c == ',') {
      row.push_back(std::move(cur));
      cur = {};
      at_field_start = true;
    } else if (c == '\n') {
      row.push_back(std::move(cur));
      rows.push_back(std::move(row));
      cur = {};
      row.clear();
      at_field_start = true;
    } else if (c == '\r') {
      throw MalformedCsv("CR line ending");
    } else {
      if (cur.quoted) throw MalformedCsv("text after closing quote");
      cur.text += c;
      at_field_start = false;
    }
  }
  if (in_quotes) throw MalformedCsv("unterminated quoted field");
  if (!at_field_start || !row.empty()) {
    row.push_back(std::move(cur));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_escape(const std::string& s) {
  const bool needs = s.empty() || s.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Json cell_to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, BigInt>) {
          return v.get_str();
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

std::string cell_to_csv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, BigInt>) {
          return v.get_str();
        } else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(v) ? format_real(v) : "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return csv_escape(v);
        }
      },
      c);
}

Json field_to_json(const Field& f, ColumnKind kind) {
  if (f.text.empty() && !f.quoted) return nullptr;
  switch (kind) {
    case ColumnKind::integer:
      return f.text;
    case ColumnKind::real: {
      char* end = nullptr;
      const double v = std::strtod(f.text.c_str(), &end);
      if (end != f.text.c_str() + f.text.size()) throw MalformedCsv("bad real: " + f.text);
      return v;
    }
    case ColumnKind::boolean:
      if (f.text == "true") return true;
      if (f.text == "false") return false;
      throw MalformedCsv("bad boolean: " + f.text);
    case ColumnKind::text:
      return f.text;
  }
  return nullptr;
}

Cell opt_big(const std::optional<BigInt>& v) { return v ? Cell{*v} : Cell{}; }

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match the header");
  rows.push_back(std::move(row));
}

std::vector<ColumnKind> Table::kinds() const {
  std::vector<ColumnKind> out;
  for (const auto& c : columns) out.push_back(c.kind);
  return out;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json table_to_json(const Table& t) {
  Json out = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i].name] = cell_to_json(row[i]);
    out.push_back(std::move(obj));
  }
  return out;
}

std::string table_to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(t.columns[i].name);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_to_csv(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  for (auto& row : parse_fields(text)) {
    auto& dst = out.emplace_back();
    for (auto& f : row) dst.push_back(std::move(f.text));
  }
  return out;
}

Json csv_to_json(std::string_view text, const std::vector<ColumnKind>& kinds) {
  const auto rows = parse_fields(text);
  if (rows.empty()) throw MalformedCsv("missing header row");
  const auto& header = rows.front();
  if (header.size() != kinds.size()) throw MalformedCsv("header width does not match the column kinds");
  Json out = Json::array();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) throw MalformedCsv("row " + std::to_string(r) + " has the wrong width");
    Json obj = Json::object();
    for (std::size_t i = 0; i < header.size(); ++i) obj[header[i].text] = field_to_json(rows[r][i], kinds[i]);
    out.push_back(std::move(obj));
  }
  return out;
}

Table reports_table(const std::vector<VerificationReport>& reports) {
  Table t;
  t.columns = {{"identity_name", ColumnKind::text}, {"trunc_order", ColumnKind::integer},
               {"status", ColumnKind::text},        {"first_mismatch", ColumnKind::integer},
               {"lhs_coeff", ColumnKind::integer},  {"rhs_coeff", ColumnKind::integer},
               {"informational", ColumnKind::boolean}, {"detail", ColumnKind::text}};
  for (const auto& r : reports) {
    Cell mismatch = r.first_mismatch ? Cell{BigInt(static_cast<unsigned long>(*r.first_mismatch))} : Cell{};
    t.add_row({r.identity_name, BigInt(static_cast<unsigned long>(r.trunc_order)), std::string(r.passed ? "pass" : "fail"),
               mismatch, opt_big(r.lhs_coeff), opt_big(r.rhs_coeff), r.informational, r.detail});
  }
  return t;
}

Json reports_to_json(const std::vector<VerificationReport>& reports) {
  Json out = table_to_json(reports_table(reports));
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].table.empty()) continue;
    Json rows = Json::array();
    for (const auto& row : reports[i].table) {
      rows.push_back({{"n", row.index}, {"lhs", row.lhs.get_str()}, {"rhs", row.rhs.get_str()}});
    }
    out[i]["table"] = std::move(rows);
  }
  return out;
}

}  // namespace krun
