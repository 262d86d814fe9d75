#pragma once

// Reflection groups as matrix groups over cyclotomic fields: the monomial
// family G(p,q,n), Coxeter geometric representations, the shipped catalog,
// and numerology profiles (degrees, exponents, coexponents).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "reflectia/cyc_matrix.hpp"

namespace reflectia {

struct NumerologyProfile {
  int n = 0;
  std::vector<int> degrees;
  std::vector<int> exponents;
  std::vector<int> coexponents;
  int h = 0;
  int N = 0;
  int Nstar = 0;
  int e1 = 0;
  std::optional<int> a;  // gap of the exponent progression
  bool irreducible = false;
  bool duality = false;
  bool coincidental = false;

  // Sorts both lists and fills the derived fields. Irreducibility is read off
  // the coexponents: exactly one equals 1 and none is 0.
  static NumerologyProfile from(std::vector<int> degrees, std::vector<int> coexponents);
  // Abstract coincidental profile: exponents e1, e1+a, ..., coexponents
  // 1, 1+a, ... For n = 1 the gap is irrelevant and recorded as given.
  static NumerologyProfile coincidental_profile(int n, int e1, int a);

  // Order of the group, prod d_i.
  std::uint64_t order() const;
  nlohmann::json to_json() const;
  friend bool operator==(const NumerologyProfile& x, const NumerologyProfile& y) {
    return x.degrees == y.degrees && x.coexponents == y.coexponents;
  }
};

struct GroupSpec {
  std::string name;
  int n = 0;
  int m = 1;
  std::vector<CycMatrix> generators;
  std::optional<std::uint64_t> expected_order;
  std::optional<std::vector<int>> expected_degrees;
  std::optional<std::vector<int>> expected_coexponents;
  bool unitary = false;
  bool real = false;
  std::string source;
  // Shephard-Todd parameters (p, q, n) for monomial groups.
  std::optional<std::array<int, 3>> monomial;

  // Profile built from the expected data when both lists are present.
  std::optional<NumerologyProfile> expected_profile() const;
};

// G(p, q, n): monomial matrices with entries in mu_p whose nonzero entries
// multiply to a (p/q)-th root of unity. Requires q | p.
GroupSpec build_monomial(int p, int q, int n);
// Geometric representation of the Coxeter group with matrix M (M[i][i] = 1).
GroupSpec build_coxeter(const std::vector<std::vector<int>>& coxeter_matrix, const std::string& name = "coxeter");
// Named irreducible Coxeter types: A<n>, B<n>, D<n>, E6..E8, F4, H3, H4,
// I2(m). Sets expected degrees. Throws UnknownGroup for anything else.
GroupSpec build_coxeter_type(const std::string& name);

// Catalog file location: $REFLECTIA_CATALOG if set, else the shipped file.
std::string default_catalog_path();
std::string default_data_dir();
std::vector<std::string> catalog_names(const std::string& path = default_catalog_path());
// Loads and self-checks one entry (invertible generators, unitarity when
// flagged). Throws UnknownGroup or InvalidArgument.
GroupSpec load_catalog(const std::string& name, const std::string& path = default_catalog_path());
GroupSpec parse_catalog_entry(const nlohmann::json& entry);

// Accepts catalog names and constructor syntax: "G24", "H3", "G(3,1,2)",
// "A4", "B3", "I2(7)". Throws UnknownGroup.
GroupSpec resolve_group(const std::string& name);

// Reflections are elements w with rank(w - 1) = 1.
bool is_reflection(const CycMatrix& w);

}  // namespace reflectia
