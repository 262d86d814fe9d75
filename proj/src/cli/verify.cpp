#include "reflectia/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "reflectia/error.hpp"
#include "reflectia/formulas.hpp"
#include "reflectia/table_expr.hpp"

namespace reflectia {

bool NuOutcome::equal() const {
  return std::all_of(references.begin(), references.end(), [](const NuReference& x) { return x.equal; });
}

bool VerifyReport::pass() const {
  if (!numerology_ok) return false;
  for (const auto& o : nu) {
    if (!o.equal()) return false;
  }
  for (const auto& c : slices) {
    if (!c.ok) return false;
  }
  for (const auto& p : psi) {
    if (p.expected != p.got) return false;
  }
  return true;
}

nlohmann::json VerifyReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["group"] = group;
  j["n"] = n;
  j["order"] = order;
  j["reflections"] = reflections;
  j["profile"] = profile.to_json();
  if (expected) j["expected_profile"] = expected->to_json();
  j["numerology_ok"] = numerology_ok;
  nlohmann::json nus = nlohmann::json::array();
  for (const auto& o : nu) {
    nlohmann::json e;
    e["r"] = o.r;
    e["brute"] = o.brute.str();
    e["equal"] = o.equal();
    nlohmann::json refs = nlohmann::json::array();
    for (const auto& x : o.references) refs.push_back({{"source", x.source}, {"nu", x.nu.str()}, {"equal", x.equal}});
    e["references"] = refs;
    nus.push_back(e);
  }
  j["nu"] = nus;
  nlohmann::json sl = nlohmann::json::object();
  for (const auto& c : slices) sl[c.name] = c.ok;
  j["slice_checks"] = sl;
  long bad = 0;
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : psi) {
    ps.push_back({{"k", p.k}, {"r", p.r}, {"gutkin_opdam", p.expected}, {"from_nu", p.got}});
    bad += p.expected != p.got;
  }
  j["psi"] = ps;
  j["psi_failures"] = bad;
  j["pass"] = pass();
  if (with_timing) j["seconds"] = seconds;
  return j;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << group << ": |W| = " << order << ", N = " << reflections << ", degrees";
  for (int d : profile.degrees) os << " " << d;
  os << ", coexponents";
  for (int d : profile.coexponents) os << " " << d;
  os << (profile.coincidental ? " (coincidental)" : profile.duality ? " (duality)" : "") << "\n";
  os << "  numerology " << (numerology_ok ? "ok" : "MISMATCH") << "\n";
  for (const auto& o : nu) {
    os << "  nu_" << o.r << " = " << o.brute.str() << "\n";
    for (const auto& x : o.references) os << "    " << x.source << ": " << (x.equal ? "equal" : "DIFFERENT") << "\n";
  }
  for (const auto& c : slices) os << "  " << c.name << ": " << (c.ok ? "ok" : "FAIL") << "\n";
  long bad = 0;
  for (const auto& p : psi) bad += p.expected != p.got;
  os << "  Gutkin-Opdam: " << psi.size() - static_cast<std::size_t>(bad) << "/" << psi.size() << " equal\n";
  os << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

bool nu_matches(const QTSLaurent& nu, const std::vector<int>& degrees, const RationalForm& slice) {
  return RationalForm(nu, degrees) == slice;
}

std::optional<std::uint64_t> nominal_order(const GroupSpec& spec) {
  if (spec.expected_order) return spec.expected_order;
  if (auto p = spec.expected_profile()) return p->order();
  return std::nullopt;
}

namespace {

// nu_r of a closed-form slice, when the denominator cancels.
QTSLaurent slice_numerator(const RationalForm& slice, const std::vector<int>& degrees) {
  auto poly = (slice * RationalForm(one_minus_product(degrees))).as_polynomial();
  return poly ? *poly : QTSLaurent();
}

}  // namespace

VerifyReport verify_group(const GroupSpec& spec, const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  GenerateOptions gopts;
  gopts.allow_large = opts.allow_large;
  gopts.mode = opts.mode;
  const Enumeration en = generate(spec, gopts);
  const MolienResult res = analyse(en, spec.n, std::nullopt, opts.mode);

  VerifyReport rep;
  rep.group = spec.name;
  rep.n = spec.n;
  rep.order = res.order;
  rep.reflections = res.reflections;
  rep.profile = res.profile;
  rep.expected = spec.expected_profile();
  rep.numerology_ok = !rep.expected || (*rep.expected == res.profile && rep.expected->exponents == res.profile.exponents);
  if (spec.expected_order) rep.numerology_ok = rep.numerology_ok && *spec.expected_order == res.order;

  const auto& degrees = res.profile.degrees;
  const auto tables = tables_for(spec.name, opts.tables_path.empty() ? default_tables_path() : opts.tables_path);
  for (int r = 0; r <= spec.n; ++r) {
    NuOutcome o;
    o.r = r;
    o.brute = res.nu.at(static_cast<std::size_t>(r));
    if (res.profile.coincidental) {
      const RationalForm f = main_theorem(res.profile, r);
      o.references.push_back({"theorem", slice_numerator(f, degrees), nu_matches(o.brute, degrees, f)});
    }
    if (spec.monomial && (*spec.monomial)[2] >= 2 && (*spec.monomial)[0] >= 2) {
      const auto [p, q, n] = *spec.monomial;
      const RationalForm f = koike_deen_wedge(p / q, q, n, r);
      o.references.push_back({"koike", slice_numerator(f, degrees), nu_matches(o.brute, degrees, f)});
    }
    for (const auto& t : tables) {
      if (t.r != r) continue;
      const QTSLaurent nu = table_expr(t.expr);
      o.references.push_back({"table", nu, nu == o.brute});
    }
    rep.nu.push_back(std::move(o));
  }

  rep.slices = slice_checks(res, rep.expected ? *rep.expected : res.profile);

  const int N = static_cast<int>(res.reflections);
  const int Nstar = res.profile.Nstar;
  for (int r = 0; r <= spec.n; ++r) {
    for (int k = 0; k <= spec.n; ++k) {
      rep.psi.push_back({k, r, gutkin_opdam(spec.n, k, r, N, Nstar), psi_from_nu(res.nu.at(static_cast<std::size_t>(r)), k)});
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names = catalog_names();
  for (const char* c : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3", "H4", "E6", "E7", "E8"}) names.emplace_back(c);
  for (int m = 5; m <= 12; ++m) names.push_back("I2(" + std::to_string(m) + ")");
  for (int d = 2; d <= 4; ++d) {
    for (int n = 1; n <= 4; ++n) names.push_back("G(" + std::to_string(d) + ",1," + std::to_string(n) + ")");
  }
  for (const char* c : {"G(2,2,2)", "G(2,2,3)", "G(2,2,4)", "G(3,3,3)", "G(4,2,2)", "G(3,3,2)", "G(4,4,2)"}) names.emplace_back(c);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::vector<VerifyReport> verify_all(std::uint64_t max_order, const VerifyOptions& opts) {
  constexpr std::uint64_t kSmall = 20000;
  std::vector<GroupSpec> small, large;
  for (const auto& name : suite_names()) {
    GroupSpec spec = resolve_group(name);
    const auto ord = nominal_order(spec);
    if (!ord || *ord > max_order) continue;
    (*ord < kSmall ? small : large).push_back(std::move(spec));
  }
  std::vector<VerifyReport> out(small.size() + large.size());
  VerifyOptions serial = opts;
  serial.mode = ExecMode::serial;
  // Exceptions cannot leave an OpenMP region; they are carried out by hand.
  std::vector<std::string> errors(small.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < small.size(); ++i) {
    try {
      out[i] = verify_group(small[i], serial);
    } catch (const std::exception& e) {
      errors[i] = small[i].name + ": " + e.what();
    }
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw VerificationFailure(e);
  }
  for (std::size_t i = 0; i < large.size(); ++i) out[small.size() + i] = verify_group(large[i], opts);
  std::sort(out.begin(), out.end(), [](const VerifyReport& a, const VerifyReport& b) { return a.group < b.group; });
  return out;
}

}  // namespace reflectia
