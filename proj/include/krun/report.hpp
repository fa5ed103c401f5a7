// Tabular output shared by every command. A Table serializes to a JSON array
// of row objects or to CSV; parsing the CSV back with the column kinds
// reproduces the JSON rows exactly.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "krun/qgen.hpp"

namespace krun {

using Json = nlohmann::ordered_json;

enum class ColumnKind { integer, real, text, boolean };

/// monostate is an absent value: JSON null, empty CSV field.
using Cell = std::variant<std::monostate, BigInt, double, std::string, bool>;

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::text;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  std::vector<ColumnKind> kinds() const;
};

class MalformedCsv : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integers become decimal strings, reals JSON numbers (non-finite as null).
Json table_to_json(const Table& t);
/// Header row, LF endings, reals as %.17g, fields quoted only when needed.
std::string table_to_csv(const Table& t);
/// Header plus string fields; quoted fields may contain commas, quotes and LF.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);
/// Inverse of table_to_csv at the JSON level.
Json csv_to_json(std::string_view text, const std::vector<ColumnKind>& kinds);

std::string format_real(double v);

/// One row per report: identity_name, trunc_order, status, first_mismatch,
/// lhs_coeff, rhs_coeff, informational, detail.
Table reports_table(const std::vector<VerificationReport>& reports);
/// Same rows as JSON, with each non-empty coefficient table attached as
/// "table": [{n, lhs, rhs}, ...].
Json reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace krun
