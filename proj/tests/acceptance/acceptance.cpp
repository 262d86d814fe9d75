// One line per acceptance criterion. Arithmetic is exact everywhere, so the
// only pinned numbers are caps, counts and order limits.
//
//   acceptance [--with-e7]      (or REFLECTIA_ACCEPT_E7=1)
//
// Exit status is nonzero when a criterion fails for a reason not listed in
// kKnownFailures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "reflectia/derivforms.hpp"
#include "reflectia/enumerate.hpp"
#include "reflectia/error.hpp"
#include "reflectia/formulas.hpp"
#include "reflectia/groups.hpp"
#include "reflectia/molien.hpp"
#include "reflectia/qcomb.hpp"
#include "reflectia/table_expr.hpp"
#include "reflectia/verify.hpp"

using namespace reflectia;

namespace {

constexpr std::uint64_t kMaxOrder = 200000;
constexpr long kHookCap = 15;
constexpr int kHookMaxN = 7;
constexpr long kHToFCap = 30;
constexpr long kPhiCap = 20;
constexpr int kMinGutkinEqualities = 400;

struct Outcome {
  bool ok = false;
  std::string detail;
  // Set when the failure is a documented, unattainable part of the criterion.
  std::string known;
};

const std::map<int, std::string> kKnownFailures = {
    {4, "G(2,2,2) and G(2,2,3): the product-shaped formula is exact there (G(2,2,3) = A3 is coincidental, "
        "G(2,2,2) = Z2 x Z2), so no r can show a difference"},
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

const VerifyReport* find(const std::vector<VerifyReport>& reps, const std::string& name) {
  for (const auto& r : reps) {
    if (r.group == name) return &r;
  }
  return nullptr;
}

std::vector<std::string> coincidental_list() {
  std::vector<std::string> v{"A1", "A2", "A3", "A4", "H3", "G25", "G26", "G32"};
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) v.push_back("G(" + std::to_string(d) + ",1," + std::to_string(n) + ")");
  }
  for (int m = 5; m <= 12; ++m) v.push_back("I2(" + std::to_string(m) + ")");
  for (int k : {4, 5, 6, 8, 9, 10, 14, 16, 17, 18, 20, 21}) v.push_back("G" + std::to_string(k));
  return v;
}

Outcome theorem_reproduction(const std::vector<VerifyReport>& reps) {
  std::vector<std::string> bad;
  int checked = 0;
  for (const auto& name : coincidental_list()) {
    const VerifyReport* rep = find(reps, name);
    if (rep == nullptr || !rep->profile.coincidental) {
      bad.push_back(name + (rep ? " (not coincidental)" : " (missing)"));
      continue;
    }
    for (const auto& o : rep->nu) {
      bool seen = false;
      for (const auto& ref : o.references) {
        if (ref.source != "theorem") continue;
        seen = true;
        ++checked;
        if (!ref.equal) bad.push_back(name + " r=" + std::to_string(o.r));
      }
      if (!seen) bad.push_back(name + " r=" + std::to_string(o.r) + " (no closed form)");
    }
  }
  return {bad.empty(), std::to_string(coincidental_list().size()) + " groups, " + std::to_string(checked) + " slices" +
                           (bad.empty() ? "" : "; mismatches: " + join(bad))};
}

bool boundary_products(const VerifyReport& rep) {
  QTSLaurent solomon(Rational(1)), top(Rational(1));
  for (int e : rep.profile.exponents) {
    QTSLaurent f(Rational(1));
    f.add(e, 1, 0, Rational(1));
    solomon = solomon * f;
  }
  for (int e : rep.profile.coexponents) {
    QTSLaurent f;
    f.add(e, 0, 0, Rational(1));
    f.add(0, 1, 0, Rational(1));
    top = top * f;
  }
  return rep.nu.front().brute == solomon && rep.nu.back().brute == top;
}

Outcome table_reproduction(const std::vector<VerifyReport>& reps, bool with_e7) {
  std::vector<std::string> groups{"G24", "G27", "G29", "G31", "F4", "H4", "E6", "G33"};
  std::vector<VerifyReport> extra;
  if (with_e7) {
    VerifyOptions opts;
    opts.allow_large = true;
    extra.push_back(verify_group(resolve_group("E7"), opts));
    groups.push_back("E7");
  }
  std::vector<std::string> bad;
  int rows = 0;
  for (const auto& g : groups) {
    const VerifyReport* rep = find(reps, g);
    if (rep == nullptr) rep = find(extra, g);
    if (rep == nullptr) {
      bad.push_back(g + " (missing)");
      continue;
    }
    std::set<int> want;
    for (const auto& t : tables_for(g)) want.insert(t.r);
    for (const auto& o : rep->nu) {
      for (const auto& ref : o.references) {
        if (ref.source != "table") continue;
        ++rows;
        want.erase(o.r);
        if (!ref.equal) bad.push_back(g + " r=" + std::to_string(o.r));
      }
    }
    for (int r : want) bad.push_back(g + " r=" + std::to_string(r) + " (not compared)");
    if (!boundary_products(*rep)) bad.push_back(g + " boundary");
  }
  return {bad.empty(), std::to_string(rows) + " table rows over " + join(groups) + (with_e7 ? "" : " (E7 opt-in, skipped)") +
                           (bad.empty() ? "" : "; failures: " + join(bad))};
}

Outcome slice_identities(const std::vector<VerifyReport>& reps) {
  std::vector<std::string> bad;
  int checks = 0;
  for (const auto& rep : reps) {
    for (const auto& c : rep.slices) {
      ++checks;
      if (!c.ok) bad.push_back(rep.group + " " + c.name);
    }
  }
  for (const char* g : {"G(2,2,2)", "G(2,2,3)", "G(2,2,4)", "G(3,3,3)", "G(4,2,2)"}) {
    if (find(reps, g) == nullptr) bad.push_back(std::string(g) + " (missing)");
  }
  return {bad.empty(), std::to_string(checks) + " checks on " + std::to_string(reps.size()) + " groups" +
                           (bad.empty() ? "" : "; failures: " + join(bad))};
}

Outcome koike() {
  std::vector<std::string> bad, no_difference;
  int compared = 0;
  for (auto [p, q, n] : std::vector<std::array<int, 3>>{{2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {3, 3, 3}, {4, 2, 2}}) {
    const std::string name = "G(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n) + ")";
    const GroupSpec spec = build_monomial(p, q, n);
    const MolienResult res = analyse(generate(spec), n);
    bool differs = false;
    for (int r = 0; r <= n; ++r) {
      ++compared;
      const QTSLaurent slice = res.series.s_slice(r).truncate(res.cap);
      if (koike_deen_wedge(p / q, q, n, r).expand(res.cap) != slice) bad.push_back(name + " r=" + std::to_string(r));
      differs = differs || theorem_one_shape(res.profile, r).expand(res.cap) != slice;
    }
    if (!differs) no_difference.push_back(name);
  }
  for (int d = 2; d <= 4; ++d) {
    for (int n = 2; n <= 4; ++n) {
      const auto prof = NumerologyProfile::coincidental_profile(n, d - 1, d);
      for (int r = 0; r <= n; ++r) {
        ++compared;
        if (koike_deen_wedge(d, 1, n, r) != main_theorem(prof, r)) bad.push_back("e=1 d=" + std::to_string(d) + " n=" + std::to_string(n));
      }
    }
  }
  Outcome o;
  o.ok = bad.empty() && no_difference.empty();
  o.detail = std::to_string(compared) + " wedge comparisons" + (bad.empty() ? " equal" : "; mismatches: " + join(bad)) +
             "; negative control shows no difference for: " + (no_difference.empty() ? "none" : join(no_difference));
  if (bad.empty() && !no_difference.empty()) {
    const std::set<std::string> expected{"G(2,2,2)", "G(2,2,3)"};
    if (std::set<std::string>(no_difference.begin(), no_difference.end()) == expected) o.known = kKnownFailures.at(4);
  }
  return o;
}

Outcome gutkin_opdam_counts(const std::vector<VerifyReport>& reps) {
  int eq = 0;
  std::vector<std::string> bad;
  for (const auto& rep : reps) {
    for (const auto& p : rep.psi) {
      if (p.expected == p.got) {
        ++eq;
      } else {
        bad.push_back(rep.group + " k=" + std::to_string(p.k) + " r=" + std::to_string(p.r));
      }
    }
  }
  return {bad.empty() && eq >= kMinGutkinEqualities,
          std::to_string(eq) + " equalities (need " + std::to_string(kMinGutkinEqualities) + ")" + (bad.empty() ? "" : "; failures: " + join(bad))};
}

Outcome hooks() {
  std::vector<std::string> bad;
  for (int n = 1; n <= kHookMaxN; ++n) {
    if (!hook_orthogonality_residual(n, kHookCap).is_zero()) bad.push_back("n=" + std::to_string(n));
  }
  return {bad.empty(), "n <= " + std::to_string(kHookMaxN) + " to q^" + std::to_string(kHookCap) + (bad.empty() ? "" : "; failures: " + join(bad))};
}

Outcome h_to_f() {
  std::vector<std::string> bad;
  int profiles = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int e1 = 1; e1 <= 4; ++e1) {
      for (int a = 1; a <= 4; ++a) {
        ++profiles;
        if (!h_to_f_check(NumerologyProfile::coincidental_profile(n, e1, a), kHToFCap).is_zero()) {
          bad.push_back("(" + std::to_string(n) + "," + std::to_string(e1) + "," + std::to_string(a) + ")");
        }
      }
    }
  }
  int sets = 0;
  for (auto [n, e1, a] : std::vector<std::array<int, 3>>{{2, 1, 2}, {3, 1, 1}, {2, 2, 3}}) {
    ++sets;
    const auto p = NumerologyProfile::coincidental_profile(n, e1, a);
    if (!twophi1_residual(p, kPhiCap).is_zero()) bad.push_back("2phi1 (" + std::to_string(n) + "," + std::to_string(e1) + "," + std::to_string(a) + ")");
    if (!jackson_residual(p, kPhiCap).is_zero()) bad.push_back("jackson (" + std::to_string(n) + "," + std::to_string(e1) + "," + std::to_string(a) + ")");
  }
  return {bad.empty(), std::to_string(profiles) + " profiles to q^" + std::to_string(kHToFCap) + ", " + std::to_string(sets) +
                           " parameter sets to q^" + std::to_string(kPhiCap) + (bad.empty() ? "" : "; failures: " + join(bad))};
}

QTSLaurent qlist(const std::vector<int>& c) {
  QTSLaurent p;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) p.add(static_cast<int>(i), 0, 0, Rational(c[i]));
  }
  return p;
}

Outcome catalan(const std::vector<VerifyReport>& reps) {
  std::vector<std::string> bad;
  int values = 0;
  for (const auto& name : coincidental_list()) {
    const VerifyReport* rep = find(reps, name);
    if (rep == nullptr) continue;
    const NumerologyProfile& prof = rep->profile;
    for (int p : {prof.h + 1, 2 * prof.h + 1}) {
      const QTSLaurent cat = catalan_family(prof, p, CatalanKind::catalan);
      QTSLaurent sum;
      bool nonneg = cat.nonnegative_integer_coefficients();
      for (int r = 0; r <= prof.n; ++r) {
        const QTSLaurent nar = catalan_family(prof, p, CatalanKind::narayana, r);
        sum += nar;
        nonneg = nonneg && nar.nonnegative_integer_coefficients() && catalan_family(prof, p, CatalanKind::kirkman, r).nonnegative_integer_coefficients();
        values += 2;
      }
      ++values;
      if (!nonneg) bad.push_back(name + " p=" + std::to_string(p) + " negative");
      if (sum != cat) bad.push_back(name + " p=" + std::to_string(p) + " Narayana sum");
    }
  }
  if (catalan_family(NumerologyProfile::coincidental_profile(2, 1, 1), 4, CatalanKind::catalan) != qlist({1, 0, 1, 1, 1, 0, 1})) bad.push_back("A2 p=4");
  // Type A and B/C q-Narayana lines, evaluated directly.
  for (int n = 2; n <= 5; ++n) {
    const auto prof = NumerologyProfile::coincidental_profile(n - 1, 1, 1);
    for (int p : {n + 1, 2 * n + 1}) {
      for (int r = 0; r < n; ++r) {
        const QTSLaurent top = qbinomial(n - 1, r, 1) * qbinomial(p - 1, r, 1) * QTSLaurent::monomial(Rational(1), (n - 1 - r) * (p - 1 - r));
        const auto want = exact_divide(top, qinteger(r + 1, 1));
        ++values;
        if (!want || catalan_family(prof, p, CatalanKind::narayana, r) != *want) bad.push_back("A" + std::to_string(n - 1) + " Narayana p=" + std::to_string(p) + " r=" + std::to_string(r));
      }
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const auto prof = NumerologyProfile::coincidental_profile(n, 1, 2);
    for (int p : {2 * n + 1, 4 * n + 1}) {
      const int m = (p - 1) / 2;
      for (int r = 0; r <= n; ++r) {
        const QTSLaurent want = qbinomial(n, r, 2) * qbinomial(m, r, 2) * QTSLaurent::monomial(Rational(1), 2 * (n - r) * (m - r));
        ++values;
        if (catalan_family(prof, p, CatalanKind::narayana, r) != want) bad.push_back("B" + std::to_string(n) + " Narayana p=" + std::to_string(p) + " r=" + std::to_string(r));
      }
    }
  }
  if (catalan_family(NumerologyProfile::coincidental_profile(2, 1, 2), 5, CatalanKind::narayana, 1) != qlist({0, 0, 1, 0, 2, 0, 1})) bad.push_back("B2 p=5 r=1");
  return {bad.empty(), std::to_string(values) + " values" + (bad.empty() ? "" : "; failures: " + join(bad))};
}

Outcome cluster() {
  std::vector<std::pair<std::string, NumerologyProfile>> profs;
  for (int n = 1; n <= 5; ++n) profs.emplace_back("A" + std::to_string(n), NumerologyProfile::coincidental_profile(n, 1, 1));
  for (int n = 2; n <= 4; ++n) profs.emplace_back("B" + std::to_string(n), NumerologyProfile::coincidental_profile(n, 1, 2));
  for (int m = 3; m <= 12; ++m) profs.emplace_back("I2(" + std::to_string(m) + ")", NumerologyProfile::coincidental_profile(2, 1, m - 2));
  profs.emplace_back("H3", NumerologyProfile::coincidental_profile(3, 1, 4));
  std::vector<std::string> bad;
  for (const auto& [name, p] : profs) {
    for (int r = 0; r <= p.n; ++r) {
      const ClusterCounts c = cluster_fh(p, r);
      if (c.f != c.fomin_reading) bad.push_back(name + " r=" + std::to_string(r));
    }
    if (!cluster_h_to_f_holds(p)) bad.push_back(name + " h-to-f");
  }
  if (cluster_fh(NumerologyProfile::coincidental_profile(2, 1, 1), 1).f != 5) bad.push_back("A2 f_1");
  return {bad.empty(), std::to_string(profs.size()) + " types" + (bad.empty() ? "" : "; failures: " + join(bad))};
}

Outcome rank2() {
  std::vector<std::pair<std::string, bool>> todo;
  for (const auto& name : catalog_names()) {
    const GroupSpec g = load_catalog(name);
    if (g.n != 2 || !g.unitary) continue;
    const auto prof = g.expected_profile();
    if (prof && prof->irreducible && prof->duality) todo.emplace_back(name, true);
  }
  // G(2,2,2) is reducible, so the duality requirement is dropped for the
  // monomial families.
  for (int d = 2; d <= 4; ++d) {
    todo.emplace_back("G(" + std::to_string(d) + ",1,2)", false);
    todo.emplace_back("G(" + std::to_string(d) + "," + std::to_string(d) + ",2)", false);
  }
  std::vector<std::string> bad, names;
  for (const auto& [name, duality] : todo) {
    names.push_back(name);
    const Rank2Report rep = rank2_verify(resolve_group(name), duality);
    for (const auto& c : rep.checks) {
      if (!c.ok) bad.push_back(name + " " + c.name);
    }
  }
  return {bad.empty(), std::to_string(todo.size()) + " groups: " + join(names) + (bad.empty() ? "" : "; failures: " + join(bad))};
}

Outcome numerology(const std::vector<VerifyReport>& reps) {
  std::vector<std::string> bad;
  int compared = 0;
  for (const auto& rep : reps) {
    if (!rep.expected) continue;
    ++compared;
    if (!rep.numerology_ok) bad.push_back(rep.group);
  }
  // G(de,e,n) coexponents: 1, de+1, ..., (n-1)de+1 for d >= 2 and
  // 1, e+1, ..., (n-2)e+1, (n-1)e-n+1 for d = 1.
  for (auto [d, e, n] : std::vector<std::array<int, 3>>{{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {1, 2, 3}, {1, 2, 4}, {1, 3, 3}, {1, 4, 2}}) {
    const auto res = analyse(generate(build_monomial(d * e, e, n)), n);
    std::vector<int> co{1};
    if (d >= 2) {
      for (int i = 1; i < n; ++i) co.push_back(i * d * e + 1);
    } else {
      for (int i = 1; i < n - 1; ++i) co.push_back(i * e + 1);
      co.push_back((n - 1) * e - n + 1);
    }
    std::sort(co.begin(), co.end());
    ++compared;
    if (res.profile.coexponents != co) bad.push_back("G(" + std::to_string(d * e) + "," + std::to_string(e) + "," + std::to_string(n) + ")");
  }
  return {bad.empty(), std::to_string(compared) + " groups" + (bad.empty() ? "" : "; failures: " + join(bad))};
}

}  // namespace

int main(int argc, char** argv) {
  bool with_e7 = false;
  if (const char* env = std::getenv("REFLECTIA_ACCEPT_E7"); env != nullptr && std::strcmp(env, "1") == 0) with_e7 = true;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--with-e7") == 0) {
      with_e7 = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--with-e7]\n");
      return 2;
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<VerifyReport> reps;
  try {
    reps = verify_all(kMaxOrder);
  } catch (const std::exception& e) {
    std::printf("verify-all aborted: %s\n", e.what());
    return 1;
  }
  const double suite_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("suite: %zu groups with |W| <= %llu verified in %.1f s\n", reps.size(), static_cast<unsigned long long>(kMaxOrder), suite_s);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"theorem reproduction", [&] { return theorem_reproduction(reps); }},
      {"table reproduction", [&] { return table_reproduction(reps, with_e7); }},
      {"universal slice identities", [&] { return slice_identities(reps); }},
      {"Koike wedge formula and negative control", koike},
      {"Gutkin-Opdam", [&] { return gutkin_opdam_counts(reps); }},
      {"hook-content orthogonality", hooks},
      {"h-to-f, 2phi1 and Jackson", h_to_f},
      {"Catalan family", [&] { return catalan(reps); }},
      {"cluster f and h", cluster},
      {"rank 2 basis", rank2},
      {"numerology recovery", [&] { return numerology(reps); }},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), ""};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
    const char* tag = o.ok ? "PASS" : "FAIL";
    std::printf("%s %2zu %s: %s (%.1f s)\n", tag, i + 1, criteria[i].first.c_str(), o.detail.c_str(), s);
    if (!o.ok) {
      if (o.known.empty()) {
        ++unexpected;
      } else {
        std::printf("     known, unattainable: %s\n", o.known.c_str());
      }
    }
    std::fflush(stdout);
  }
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
