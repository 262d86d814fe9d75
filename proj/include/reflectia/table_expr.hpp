#pragma once

// Factor-list expressions for tabulated nu_r polynomials:
//   ["QInt", m, b]                 [m]_{q^b}
//   ["QBin", n, r, b]              [n r]_{q^b}
//   ["Poch", sign, tpow, qshift, qstep, count]
//                                  (sign t^tpow q^qshift; q^qstep)_count
//   ["Poly", [[q, t, c], ...]]     sum c q^q t^t, c an integer or "a/b"
//   ["Prod", [e, ...]], ["Sum", [e, ...]]
//   ["Quot", e1, e2]               exact division by a polynomial in q

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "reflectia/qseries.hpp"

namespace reflectia {

// Fully expanded polynomial. Throws ParseError on a malformed expression
// and VerificationFailure when a quotient is not exact.
QTSLaurent table_expr(const nlohmann::json& expr);

// Exact quotient a / b where b is a nonzero polynomial in q alone.
std::optional<QTSLaurent> exact_divide(const QTSLaurent& a, const QTSLaurent& b);

struct TableEntry {
  std::string group;
  int r = 0;
  nlohmann::json expr;
  std::optional<nlohmann::json> printed;  // the printed form when expr repairs it
  std::string note;
};

std::string default_tables_path();
std::vector<TableEntry> load_tables(const std::string& path = default_tables_path());
std::vector<TableEntry> tables_for(const std::string& group, const std::string& path = default_tables_path());

}  // namespace reflectia
