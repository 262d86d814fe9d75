#pragma once

// Per-group verification: brute force nu_r against every closed form that
// applies (coincidental product, Koike's G(de,e,n) wedge formulas, shipped
// tables), slice identities, Gutkin-Opdam counts and numerology recovery.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "reflectia/enumerate.hpp"
#include "reflectia/molien.hpp"

namespace reflectia {

struct NuReference {
  std::string source;  // "theorem", "koike" or "table"
  QTSLaurent nu;
  bool equal = false;
};

struct NuOutcome {
  int r = 0;
  QTSLaurent brute;
  std::vector<NuReference> references;
  bool equal() const;
};

struct PsiOutcome {
  int k = 0;
  int r = 0;
  long expected = 0;  // Gutkin-Opdam
  long got = 0;       // from brute nu_r
};

struct VerifyReport {
  std::string group;
  int n = 0;
  std::uint64_t order = 0;
  std::uint64_t reflections = 0;
  NumerologyProfile profile;  // recovered
  std::optional<NumerologyProfile> expected;
  bool numerology_ok = false;
  std::vector<NuOutcome> nu;
  std::vector<CheckOutcome> slices;
  std::vector<PsiOutcome> psi;
  double seconds = 0;

  bool pass() const;
  // Timing is left out unless asked for, so that the output is reproducible.
  nlohmann::json to_json(bool with_timing = false) const;
  std::string text() const;
};

struct VerifyOptions {
  bool allow_large = false;
  ExecMode mode = ExecMode::parallel;
  std::string tables_path;  // empty: shipped tables
};

VerifyReport verify_group(const GroupSpec& spec, const VerifyOptions& opts = {});

// brute nu_r(q,t) of an analysed group next to one closed form over the
// degrees: equal iff num / prod(1 - q^d) agree as rational functions.
bool nu_matches(const QTSLaurent& nu, const std::vector<int>& degrees, const RationalForm& slice);

// Group order from the spec's expected data, or nullopt.
std::optional<std::uint64_t> nominal_order(const GroupSpec& spec);

// Catalog groups, Coxeter types, G(d,1,n) for d, n <= 4, the
// non-coincidental G(de,e,n) samples and dihedral groups I2(5..12).
std::vector<std::string> suite_names();

// Every suite group with nominal order <= max_order, verified, sorted by
// name. Small groups run in parallel with serial kernels; large ones run
// one at a time with parallel kernels.
std::vector<VerifyReport> verify_all(std::uint64_t max_order, const VerifyOptions& opts = {});

}  // namespace reflectia
