#include "reflectia/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <regex>

#include "reflectia/error.hpp"

#ifndef REFLECTIA_DATA_DIR
#define REFLECTIA_DATA_DIR "data"
#endif

namespace reflectia {

// ------------------------------------------------------------- profiles

NumerologyProfile NumerologyProfile::from(std::vector<int> degrees, std::vector<int> coexponents) {
  if (degrees.size() != coexponents.size()) throw InvalidArgument("degrees and coexponents differ in length");
  std::sort(degrees.begin(), degrees.end());
  std::sort(coexponents.begin(), coexponents.end());
  NumerologyProfile p;
  p.n = static_cast<int>(degrees.size());
  p.degrees = degrees;
  p.coexponents = coexponents;
  for (int d : degrees) p.exponents.push_back(d - 1);
  if (p.n == 0) return p;
  p.h = degrees.back();
  p.N = std::accumulate(p.exponents.begin(), p.exponents.end(), 0);
  p.Nstar = std::accumulate(coexponents.begin(), coexponents.end(), 0);
  p.e1 = p.exponents.front();
  p.irreducible = std::count(coexponents.begin(), coexponents.end(), 1) == 1 && std::count(coexponents.begin(), coexponents.end(), 0) == 0;
  if (p.n == 1) {
    p.a = 1;
  } else {
    const int gap = p.exponents[1] - p.exponents[0];
    bool arithmetic = gap > 0;
    for (int i = 1; i < p.n; ++i) arithmetic = arithmetic && p.exponents[static_cast<std::size_t>(i)] - p.exponents[static_cast<std::size_t>(i - 1)] == gap;
    if (arithmetic) p.a = gap;
  }
  p.duality = p.irreducible;
  for (int i = 0; i < p.n; ++i) {
    if (p.exponents[static_cast<std::size_t>(i)] + coexponents[static_cast<std::size_t>(p.n - 1 - i)] != p.h) p.duality = false;
  }
  p.coincidental = p.duality && p.a.has_value();
  return p;
}

NumerologyProfile NumerologyProfile::coincidental_profile(int n, int e1, int a) {
  if (n < 1 || e1 < 1 || a < 1) throw InvalidArgument("coincidental profile needs n, e1, a >= 1");
  std::vector<int> degrees;
  std::vector<int> coexps;
  for (int i = 0; i < n; ++i) {
    degrees.push_back(e1 + 1 + a * i);
    coexps.push_back(1 + a * i);
  }
  NumerologyProfile p = from(degrees, coexps);
  if (n == 1) p.a = a;
  return p;
}

std::uint64_t NumerologyProfile::order() const {
  std::uint64_t o = 1;
  for (int d : degrees) o *= static_cast<std::uint64_t>(d);
  return o;
}

nlohmann::json NumerologyProfile::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["degrees"] = degrees;
  j["exponents"] = exponents;
  j["coexponents"] = coexponents;
  j["h"] = h;
  j["N"] = N;
  j["Nstar"] = Nstar;
  j["e1"] = e1;
  j["a"] = a ? nlohmann::json(*a) : nlohmann::json(nullptr);
  j["irreducible"] = irreducible;
  j["duality"] = duality;
  j["coincidental"] = coincidental;
  return j;
}

std::optional<NumerologyProfile> GroupSpec::expected_profile() const {
  if (!expected_degrees) return std::nullopt;
  if (expected_coexponents) return NumerologyProfile::from(*expected_degrees, *expected_coexponents);
  if (real) {
    std::vector<int> ex;
    for (int d : *expected_degrees) ex.push_back(d - 1);
    return NumerologyProfile::from(*expected_degrees, ex);
  }
  return std::nullopt;
}

// ------------------------------------------------------------- builders

GroupSpec build_monomial(int p, int q, int n) {
  if (p < 1 || q < 1 || n < 1 || p % q != 0) throw InvalidArgument("G(p,q,n) needs q | p and positive parameters");
  const int d = p / q;
  const int e = q;
  GroupSpec g;
  g.name = "G(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
  g.n = n;
  g.m = p;
  g.unitary = true;
  g.monomial = std::array<int, 3>{p, q, n};
  g.source = "monomial matrices: adjacent transpositions, diag(zeta_p^q, 1, ...), twisted transposition";
  const Cyclotomic one(Rational(1), p);
  for (int i = 0; i + 1 < n; ++i) {
    CycMatrix s = CycMatrix::identity(n, p);
    s.set(i, i, Cyclotomic(Rational(0), p));
    s.set(i + 1, i + 1, Cyclotomic(Rational(0), p));
    s.set(i, i + 1, one);
    s.set(i + 1, i, one);
    g.generators.push_back(s);
  }
  if (d > 1) {
    CycMatrix t = CycMatrix::identity(n, p);
    t.set(0, 0, Cyclotomic::zeta(p, e));
    g.generators.push_back(t);
  }
  if (e > 1 && n >= 2) {
    // y1 -> zeta^{-1} y2, y2 -> zeta y1; columns are images of basis vectors.
    CycMatrix t = CycMatrix::identity(n, p);
    t.set(0, 0, Cyclotomic(Rational(0), p));
    t.set(1, 1, Cyclotomic(Rational(0), p));
    t.set(1, 0, Cyclotomic::zeta(p, -1));
    t.set(0, 1, Cyclotomic::zeta(p, 1));
    g.generators.push_back(t);
  }
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) order *= static_cast<std::uint64_t>(p);
  for (int i = 2; i <= n; ++i) order *= static_cast<std::uint64_t>(i);
  order /= static_cast<std::uint64_t>(e);
  g.expected_order = order;
  std::vector<int> degrees;
  for (int i = 1; i < n; ++i) degrees.push_back(i * d * e);
  degrees.push_back(d * n);
  std::vector<int> coexps;
  if (d >= 2) {
    for (int i = 0; i < n; ++i) coexps.push_back(1 + i * d * e);
  } else {
    for (int i = 0; i + 1 < n; ++i) coexps.push_back(1 + i * e);
    coexps.push_back((n - 1) * (e - 1));
  }
  std::sort(degrees.begin(), degrees.end());
  std::sort(coexps.begin(), coexps.end());
  g.expected_degrees = degrees;
  g.expected_coexponents = coexps;
  return g;
}

GroupSpec build_coxeter(const std::vector<std::vector<int>>& M, const std::string& name) {
  const int n = static_cast<int>(M.size());
  long field = 1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(M[static_cast<std::size_t>(i)].size()) != n) throw InvalidArgument("Coxeter matrix must be square");
    for (int j = 0; j < n; ++j) {
      const int mij = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (mij != M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] || (i == j && mij != 1) || (i != j && mij < 2)) {
        throw InvalidArgument("not a Coxeter matrix");
      }
      field = lcm_int(field, 2L * mij);
    }
  }
  GroupSpec g;
  g.name = name;
  g.n = n;
  g.m = static_cast<int>(field);
  g.real = true;
  g.source = "geometric representation on simple roots";
  for (int i = 0; i < n; ++i) {
    CycMatrix s = CycMatrix::identity(n, g.m);
    s.set(i, i, Cyclotomic(Rational(-1), g.m));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const int mij = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      // sigma_i(alpha_j) = alpha_j + 2cos(pi/m_ij) alpha_i: row i, column j.
      s.set(i, j, Cyclotomic::zeta(2 * mij, 1) + Cyclotomic::zeta(2 * mij, -1));
    }
    g.generators.push_back(s);
  }
  return g;
}

namespace {

std::vector<std::vector<int>> path_matrix(int n) {
  std::vector<std::vector<int>> M(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 3;
    M[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = 3;
  }
  return M;
}

void set_edge(std::vector<std::vector<int>>& M, int i, int j, int v) {
  M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
}

std::uint64_t product(const std::vector<int>& v) {
  std::uint64_t o = 1;
  for (int x : v) o *= static_cast<std::uint64_t>(x);
  return o;
}

}  // namespace

GroupSpec build_coxeter_type(const std::string& name) {
  std::smatch mt;
  static const std::regex classical(R"(([ABD])(\d+))");
  static const std::regex dihedral(R"(I2\((\d+)\))");
  std::vector<std::vector<int>> M;
  std::vector<int> degrees;
  if (std::regex_match(name, mt, classical)) {
    const char type = mt[1].str()[0];
    const int n = std::stoi(mt[2].str());
    if (n < 1 || n > 12 || (type == 'B' && n < 2) || (type == 'D' && n < 4)) throw UnknownGroup(name);
    M = path_matrix(n);
    if (type == 'A') {
      for (int i = 2; i <= n + 1; ++i) degrees.push_back(i);
    } else if (type == 'B') {
      set_edge(M, 0, 1, 4);
      for (int i = 1; i <= n; ++i) degrees.push_back(2 * i);
    } else {
      set_edge(M, n - 2, n - 1, 2);
      set_edge(M, n - 3, n - 1, 3);
      for (int i = 1; i < n; ++i) degrees.push_back(2 * i);
      degrees.push_back(n);
    }
  } else if (std::regex_match(name, mt, dihedral)) {
    const int m = std::stoi(mt[1].str());
    if (m < 3) throw UnknownGroup(name);
    M = {{1, m}, {m, 1}};
    degrees = {2, m};
  } else if (name == "E6" || name == "E7" || name == "E8") {
    const int n = name[1] - '0';
    // Bourbaki labels 1-3-4-5-6-7-8 with 2 attached to 4; stored 0-based.
    M = std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
    for (int i = 0; i < n; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    set_edge(M, 0, 2, 3);
    set_edge(M, 1, 3, 3);
    for (int i = 2; i + 1 < n; ++i) set_edge(M, i, i + 1, 3);
    if (n == 6) degrees = {2, 5, 6, 8, 9, 12};
    if (n == 7) degrees = {2, 6, 8, 10, 12, 14, 18};
    if (n == 8) degrees = {2, 8, 12, 14, 18, 20, 24, 30};
  } else if (name == "F4") {
    M = path_matrix(4);
    set_edge(M, 1, 2, 4);
    degrees = {2, 6, 8, 12};
  } else if (name == "H3") {
    M = path_matrix(3);
    set_edge(M, 0, 1, 5);
    degrees = {2, 6, 10};
  } else if (name == "H4") {
    M = path_matrix(4);
    set_edge(M, 0, 1, 5);
    degrees = {2, 12, 20, 30};
  } else {
    throw UnknownGroup(name);
  }
  GroupSpec g = build_coxeter(M, name);
  std::sort(degrees.begin(), degrees.end());
  g.expected_degrees = degrees;
  g.expected_order = product(degrees);
  std::vector<int> ex;
  for (int d : degrees) ex.push_back(d - 1);
  g.expected_coexponents = ex;
  return g;
}

// -------------------------------------------------------------- catalog

std::string default_data_dir() { return REFLECTIA_DATA_DIR; }

std::string default_catalog_path() {
  if (const char* env = std::getenv("REFLECTIA_CATALOG"); env != nullptr && *env != '\0') return env;
  return default_data_dir() + "/catalog.json";
}

namespace {

nlohmann::json read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open catalog " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("catalog " + path + ": " + ex.what());
  }
  return j;
}

Cyclotomic parse_entry(const nlohmann::json& coeffs, int m) {
  std::vector<Rational> c;
  for (const auto& x : coeffs) c.push_back(Rational::parse(x.get<std::string>()));
  if (static_cast<int>(c.size()) != euler_phi(m)) throw ParseError("catalog entry has wrong coefficient count for m = " + std::to_string(m));
  return Cyclotomic::from_coeffs(m, std::move(c));
}

}  // namespace

GroupSpec parse_catalog_entry(const nlohmann::json& e) {
  GroupSpec g;
  g.name = e.at("name").get<std::string>();
  g.n = e.at("n").get<int>();
  g.m = e.at("m").get<int>();
  g.unitary = e.value("unitary", false);
  g.real = e.value("real", false);
  g.source = e.value("source", "");
  if (e.contains("expected_order")) g.expected_order = e.at("expected_order").get<std::uint64_t>();
  if (e.contains("expected_degrees")) g.expected_degrees = e.at("expected_degrees").get<std::vector<int>>();
  if (e.contains("expected_coexponents")) g.expected_coexponents = e.at("expected_coexponents").get<std::vector<int>>();
  for (const auto& gen : e.at("generators")) {
    if (static_cast<int>(gen.size()) != g.n) throw ParseError(g.name + ": generator has wrong row count");
    CycMatrix mat(g.n, g.m);
    for (int i = 0; i < g.n; ++i) {
      const auto& row = gen.at(static_cast<std::size_t>(i));
      if (static_cast<int>(row.size()) != g.n) throw ParseError(g.name + ": generator has wrong column count");
      for (int j = 0; j < g.n; ++j) mat.set(i, j, parse_entry(row.at(static_cast<std::size_t>(j)), g.m));
    }
    if (mat.det().is_zero()) throw InvalidArgument(g.name + ": generator is not invertible");
    if (g.unitary && !(mat.conj_transpose() * mat).is_identity()) throw InvalidArgument(g.name + ": generator flagged unitary is not unitary");
    g.generators.push_back(std::move(mat));
  }
  return g;
}

std::vector<std::string> catalog_names(const std::string& path) {
  std::vector<std::string> out;
  const nlohmann::json cat = read_catalog(path);
  for (const auto& e : cat.at("groups")) out.push_back(e.at("name").get<std::string>());
  return out;
}

GroupSpec load_catalog(const std::string& name, const std::string& path) {
  const nlohmann::json cat = read_catalog(path);
  for (const auto& e : cat.at("groups")) {
    if (e.at("name").get<std::string>() == name) return parse_catalog_entry(e);
  }
  throw UnknownGroup(name);
}

GroupSpec resolve_group(const std::string& raw) {
  std::string name;
  for (char c : raw) {
    if (c != ' ') name.push_back(c);
  }
  static const std::regex monomial(R"(G\((\d+),(\d+),(\d+)\))");
  std::smatch mt;
  if (std::regex_match(name, mt, monomial)) {
    const int p = std::stoi(mt[1].str());
    const int q = std::stoi(mt[2].str());
    const int n = std::stoi(mt[3].str());
    if (p < 1 || q < 1 || n < 1 || p % q != 0 || p > 60 || n > 12) throw UnknownGroup(raw);
    return build_monomial(p, q, n);
  }
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"G23", "H3"}, {"G28", "F4"}, {"G30", "H4"}, {"G35", "E6"}, {"G36", "E7"}, {"G37", "E8"}};
  for (const auto& [alias, target] : aliases) {
    if (name == alias) {
      GroupSpec g = build_coxeter_type(target);
      g.name = alias;
      return g;
    }
  }
  try {
    return build_coxeter_type(name);
  } catch (const UnknownGroup&) {
  }
  return load_catalog(name);
}

bool is_reflection(const CycMatrix& w) { return w.rank_minus_identity() == 1; }

}  // namespace reflectia
