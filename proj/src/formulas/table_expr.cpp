#include "reflectia/table_expr.hpp"

#include <fstream>

#include "reflectia/error.hpp"
#include "reflectia/groups.hpp"
#include "reflectia/qcomb.hpp"

namespace reflectia {

std::optional<QTSLaurent> exact_divide(const QTSLaurent& a, const QTSLaurent& b) {
  if (b.is_zero()) throw DivisionByZero();
  for (const auto& [q, c] : b.terms()) {
    if (!c.is_constant()) throw InvalidArgument("exact_divide needs a divisor in q alone");
  }
  if (a.is_zero()) return QTSLaurent();
  const int lb = b.lowest_q();
  const int hb = b.highest_q();
  const Rational lead_inv = b.coeff(lb).constant().inverse();
  QTSLaurent rem = a.exact();
  QTSLaurent quo;
  const int top = a.highest_q() - hb;
  while (!rem.is_zero() && rem.lowest_q() - lb <= top) {
    const int k = rem.lowest_q() - lb;
    const TSPoly c = rem.coeff(rem.lowest_q()) * lead_inv;
    quo.add(k, c);
    QTSLaurent step;
    for (const auto& [q, bc] : b.terms()) step.add(q + k, c * bc.constant());
    rem -= step;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quo;
}

namespace {

Rational parse_coeff(const nlohmann::json& c) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (c.is_string()) return Rational::parse(c.get<std::string>());
  throw ParseError("Poly coefficient must be an integer or a rational string");
}

int arg_int(const nlohmann::json& e, std::size_t i) {
  if (i >= e.size() || !e[i].is_number_integer()) throw ParseError("expected an integer at position " + std::to_string(i) + " of " + e.dump());
  return e[i].get<int>();
}

const nlohmann::json& arg_list(const nlohmann::json& e, std::size_t i) {
  if (i >= e.size() || !e[i].is_array()) throw ParseError("expected a list at position " + std::to_string(i) + " of " + e.dump());
  return e[i];
}

}  // namespace

QTSLaurent table_expr(const nlohmann::json& e) {
  if (!e.is_array() || e.empty() || !e[0].is_string()) throw ParseError("expression must be [\"Op\", ...]: " + e.dump());
  const std::string op = e[0].get<std::string>();
  auto need = [&](std::size_t n) {
    if (e.size() != n) throw ParseError(op + " takes " + std::to_string(n - 1) + " arguments: " + e.dump());
  };
  if (op == "QInt") {
    need(3);
    return qinteger(arg_int(e, 1), arg_int(e, 2));
  }
  if (op == "QBin") {
    need(4);
    return qbinomial(arg_int(e, 1), arg_int(e, 2), arg_int(e, 3));
  }
  if (op == "Poch") {
    need(6);
    return qpochhammer(QMono{Rational(arg_int(e, 1)), arg_int(e, 3), arg_int(e, 2), 0}, arg_int(e, 4), arg_int(e, 5));
  }
  if (op == "Poly") {
    need(2);
    QTSLaurent out;
    for (const auto& term : arg_list(e, 1)) {
      if (!term.is_array() || term.size() != 3) throw ParseError("Poly term must be [q, t, coeff]: " + term.dump());
      out.add(arg_int(term, 0), arg_int(term, 1), 0, parse_coeff(term[2]));
    }
    return out;
  }
  if (op == "Prod") {
    need(2);
    QTSLaurent out(Rational(1));
    for (const auto& x : arg_list(e, 1)) out = out * table_expr(x);
    return out;
  }
  if (op == "Sum") {
    need(2);
    QTSLaurent out;
    for (const auto& x : arg_list(e, 1)) out += table_expr(x);
    return out;
  }
  if (op == "Quot") {
    need(3);
    auto q = exact_divide(table_expr(e[1]), table_expr(e[2]));
    if (!q) throw VerificationFailure("quotient is not exact: " + e.dump());
    return *q;
  }
  throw ParseError("unknown operation " + op);
}

std::string default_tables_path() { return default_data_dir() + "/nu_tables.json"; }

std::vector<TableEntry> load_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open table file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("table file " + path + ": " + ex.what());
  }
  std::vector<TableEntry> out;
  for (const auto& x : j.at("entries")) {
    TableEntry t;
    t.group = x.at("group").get<std::string>();
    t.r = x.at("r").get<int>();
    t.expr = x.at("expr");
    if (x.contains("printed")) t.printed = x.at("printed");
    t.note = x.value("note", "");
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<TableEntry> tables_for(const std::string& group, const std::string& path) {
  std::vector<TableEntry> out;
  for (auto& t : load_tables(path)) {
    if (t.group == group) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace reflectia
