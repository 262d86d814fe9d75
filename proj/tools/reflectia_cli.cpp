// reflectia: command line front end.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input (unknown
// group, bad arguments, cap too small).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "reflectia/derivforms.hpp"
#include "reflectia/error.hpp"
#include "reflectia/formulas.hpp"
#include "reflectia/molien.hpp"
#include "reflectia/table_expr.hpp"
#include "reflectia/verify.hpp"

using namespace reflectia;
using nlohmann::json;

namespace {

struct Global {
  bool json = false;
  bool timing = false;
};

int emit(const Global& g, const std::string& command, json body, const std::string& text, bool ok) {
  if (g.json) {
    body["schema"] = 1;
    body["command"] = command;
    body["ok"] = ok;
    std::cout << body.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return ok ? 0 : 1;
}

NumerologyProfile profile_of(const GroupSpec& spec) {
  if (auto p = spec.expected_profile()) return *p;
  // No stored numerology: recover it from the group itself.
  const Enumeration en = generate(spec);
  return analyse(en, spec.n).profile;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

int cmd_groups_list(const Global& g) {
  json arr = json::array();
  std::string text;
  for (const auto& name : suite_names()) {
    const GroupSpec spec = resolve_group(name);
    const auto ord = nominal_order(spec);
    json e = {{"name", name}, {"n", spec.n}, {"m", spec.m}, {"source", spec.source}};
    if (ord) e["order"] = *ord;
    arr.push_back(e);
    text += name + "  rank " + std::to_string(spec.n) + "  order " + (ord ? std::to_string(*ord) : "?") + "  " + spec.source + "\n";
  }
  return emit(g, "groups list", {{"groups", arr}}, text, true);
}

int cmd_groups_check(const Global& g, const std::string& group, std::uint64_t max_order) {
  std::vector<std::string> names;
  if (!group.empty()) {
    names.push_back(group);
  } else {
    names = suite_names();
  }
  json arr = json::array();
  std::string text;
  bool all = true;
  for (const auto& name : names) {
    const GroupSpec spec = resolve_group(name);
    const auto ord = nominal_order(spec);
    if (group.empty() && (!ord || *ord > max_order)) continue;
    const Enumeration en = generate(spec);
    const MolienResult res = analyse(en, spec.n);
    const auto exp = spec.expected_profile();
    const bool ok = (!exp || (*exp == res.profile && exp->exponents == res.profile.exponents)) &&
                    (!spec.expected_order || *spec.expected_order == res.order);
    all = all && ok;
    arr.push_back({{"name", name}, {"order", res.order}, {"reflections", res.reflections}, {"profile", res.profile.to_json()}, {"ok", ok}});
    text += name + ": order " + std::to_string(res.order) + ", degrees " + join(res.profile.degrees) + ", exponents " + join(res.profile.exponents) +
            ", coexponents " + join(res.profile.coexponents) + (ok ? "  ok\n" : "  MISMATCH\n");
  }
  return emit(g, "groups check", {{"groups", arr}}, text, all);
}

int cmd_hilb(const Global& g, const std::string& group, std::optional<int> r, std::optional<long> cap) {
  const GroupSpec spec = resolve_group(group);
  const Enumeration en = generate(spec);
  const MolienResult res = analyse(en, spec.n, cap);
  json body = {{"group", spec.name}, {"order", res.order}};
  std::string text;
  if (r) {
    if (*r < 0 || *r > spec.n) throw InvalidArgument("r must be in 0.." + std::to_string(spec.n));
    const QTSLaurent& nu = res.nu.at(static_cast<std::size_t>(*r));
    body["r"] = *r;
    body["nu"] = nu.to_json();
    body["nu_str"] = nu.str();
    text = "nu_" + std::to_string(*r) + " = " + nu.str() + "\n";
  } else {
    const QTSLaurent s = res.series.truncate(cap ? *cap : res.cap);
    body["series"] = s.to_json();
    body["series_str"] = s.str();
    text = s.str() + "\n";
  }
  return emit(g, "hilb", body, text, true);
}

int cmd_formula(const Global& g, const std::string& group, int r) {
  const GroupSpec spec = resolve_group(group);
  if (r < 0 || r > spec.n) throw InvalidArgument("r must be in 0.." + std::to_string(spec.n));
  const NumerologyProfile p = profile_of(spec);
  json body = {{"group", spec.name}, {"r", r}, {"degrees", p.degrees}};
  std::string text;
  std::optional<RationalForm> form;
  std::string source;
  if (p.coincidental) {
    form = main_theorem(p, r);
    source = "theorem";
  } else if (spec.monomial && (*spec.monomial)[2] >= 2) {
    const auto [pp, q, n] = *spec.monomial;
    form = koike_deen_wedge(pp / q, q, n, r);
    source = "koike";
  }
  if (form) {
    const auto nu = (*form * RationalForm(one_minus_product(p.degrees))).as_polynomial();
    if (!nu) throw VerificationFailure("closed form does not clear the degree denominator");
    body["source"] = source;
    body["nu"] = nu->to_json();
    body["nu_str"] = nu->str();
    text = "nu_" + std::to_string(r) + " (" + source + ") = " + nu->str() + "\n";
    return emit(g, "formula", body, text, true);
  }
  for (const auto& t : tables_for(spec.name)) {
    if (t.r != r) continue;
    const QTSLaurent nu = table_expr(t.expr);
    body["source"] = "table";
    body["nu"] = nu.to_json();
    body["nu_str"] = nu.str();
    return emit(g, "formula", body, "nu_" + std::to_string(r) + " (table) = " + nu.str() + "\n", true);
  }
  throw NotCoincidental(spec.name + ": no closed form or table entry for r = " + std::to_string(r));
}

int cmd_verify(const Global& g, const std::string& group, bool allow_large) {
  VerifyOptions opts;
  opts.allow_large = allow_large;
  const VerifyReport rep = verify_group(resolve_group(group), opts);
  std::string text = rep.text();
  if (g.timing) text += "time " + std::to_string(rep.seconds) + " s\n";
  return emit(g, "verify", {{"report", rep.to_json(g.timing)}}, text, rep.pass());
}

int cmd_verify_all(const Global& g, std::uint64_t max_order, bool allow_large) {
  VerifyOptions opts;
  opts.allow_large = allow_large;
  const auto reps = verify_all(max_order, opts);
  json arr = json::array();
  std::string text;
  bool all = true;
  for (const auto& r : reps) {
    arr.push_back(r.to_json(g.timing));
    all = all && r.pass();
    text += (r.pass() ? "PASS  " : "FAIL  ") + r.group + "  |W| = " + std::to_string(r.order);
    if (g.timing) text += "  " + std::to_string(r.seconds) + " s";
    text += "\n";
  }
  text += std::to_string(reps.size()) + " groups, " + (all ? "all pass\n" : "FAILURES\n");
  return emit(g, "verify-all", {{"reports", arr}, {"max_order", max_order}}, text, all);
}

int cmd_catalan(const Global& g, CatalanKind kind, const std::string& group, int p, std::optional<int> r, bool unchecked) {
  const GroupSpec spec = resolve_group(group);
  const NumerologyProfile prof = profile_of(spec);
  const char* name = kind == CatalanKind::catalan ? "catalan" : kind == CatalanKind::narayana ? "narayana" : "kirkman";
  json body = {{"group", spec.name}, {"p", p}};
  std::string text;
  if (kind == CatalanKind::catalan) {
    const QTSLaurent c = catalan_family(prof, p, kind, std::nullopt, unchecked);
    body["value"] = c.to_json();
    body["value_str"] = c.str();
    text = c.str() + "\n";
  } else {
    json vals = json::array();
    const int lo = r ? *r : 0;
    const int hi = r ? *r : prof.n;
    for (int k = lo; k <= hi; ++k) {
      const QTSLaurent c = catalan_family(prof, p, kind, k, unchecked);
      vals.push_back({{"r", k}, {"value", c.to_json()}, {"value_str", c.str()}});
      text += std::string(name) + "_" + std::to_string(k) + " = " + c.str() + "\n";
    }
    body["values"] = vals;
  }
  return emit(g, name, body, text, true);
}

int cmd_cluster(const Global& g, const std::string& group) {
  const GroupSpec spec = resolve_group(group);
  const NumerologyProfile prof = profile_of(spec);
  json f = json::array(), h = json::array(), fr = json::array();
  std::string text;
  bool ok = true;
  for (int r = 0; r <= prof.n; ++r) {
    const ClusterCounts c = cluster_fh(prof, r);
    f.push_back(c.f);
    h.push_back(c.h);
    fr.push_back(c.fomin_reading);
    ok = ok && c.f == c.fomin_reading;
    text += "r = " + std::to_string(r) + ": f = " + std::to_string(c.f) + ", h = " + std::to_string(c.h) + ", Fomin-Reading " + std::to_string(c.fomin_reading) + "\n";
  }
  const bool hf = cluster_h_to_f_holds(prof);
  ok = ok && hf;
  text += std::string("sum f_r s^r = sum h_r (1+s)^r: ") + (hf ? "holds" : "FAILS") + "\n";
  return emit(g, "cluster", {{"group", spec.name}, {"f", f}, {"h", h}, {"fomin_reading", fr}, {"h_to_f", hf}}, text, ok);
}

int cmd_h_to_f(const Global& g, int n, int e1, int a, long cap) {
  const NumerologyProfile p = NumerologyProfile::coincidental_profile(n, e1, a);
  const QTSLaurent res = h_to_f_check(p, cap);
  const bool ok = res.is_zero();
  json body = {{"n", n}, {"e1", e1}, {"a", a}, {"cap", cap}, {"residual", res.str()}};
  return emit(g, "identity h-to-f", body, std::string("h-to-f residual to q^") + std::to_string(cap) + ": " + (ok ? "0\n" : res.str() + "\n"), ok);
}

int cmd_rank2(const Global& g, const std::string& group, bool any) {
  const Rank2Report rep = rank2_verify(resolve_group(group), !any);
  std::string text = rep.group + ": deg Q = " + std::to_string(rep.degQ) + ", conj(Q)(d)(Q) = " + rep.scalar.str() + ", kappa = " + rep.kappa.str() + "\n";
  for (const auto& c : rep.checks) text += "  " + c.name + ": " + (c.ok ? "ok" : "FAIL") + "  " + c.detail + "\n";
  text += rep.ok() ? "PASS\n" : "FAIL\n";
  return emit(g, "rank2", {{"report", rep.to_json()}}, text, rep.ok());
}

int fail(const Global& g, int code, const std::string& kind, const std::string& msg) {
  if (g.json) {
    std::cout << json{{"schema", 1}, {"error", kind}, {"message", msg}, {"ok", false}}.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triply graded Molien series of reflection groups: brute force, closed forms, verification"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "JSON output (schema 1, sorted keys)");
  app.add_flag("--timing", g.timing, "Include timings (output is then not reproducible)");

  std::string group;
  std::optional<int> r;
  std::optional<long> cap;
  int ri = 0, p = 0, n = 0, e1 = 0, a = 0;
  long capl = 0;
  std::uint64_t max_order = 200000;
  bool allow_large = false, unchecked = false, any = false;

  auto* groups = app.add_subcommand("groups", "List or check the known groups");
  groups->require_subcommand(1);
  auto* glist = groups->add_subcommand("list", "List catalog and constructed groups");
  auto* gcheck = groups->add_subcommand("check", "Recover numerology by brute force and compare with stored data");
  gcheck->add_option("--group", group, "Single group");
  gcheck->add_option("--max-order", max_order, "Skip groups above this order");

  auto* hilb = app.add_subcommand("hilb", "Brute force Molien series, or nu_r with --r");
  hilb->add_option("--group", group)->required();
  hilb->add_option("--r", r);
  hilb->add_option("--cap", cap, "Highest q power");

  auto* formula = app.add_subcommand("formula", "Closed form nu_r");
  formula->add_option("--group", group)->required();
  formula->add_option("--r", ri)->required();

  auto* verify = app.add_subcommand("verify", "Full verification report for one group");
  verify->add_option("--group", group)->required();
  verify->add_flag("--allow-large", allow_large, "Allow groups above one million elements");

  auto* vall = app.add_subcommand("verify-all", "Verify every suite group up to an order");
  vall->add_option("--max-order", max_order);
  vall->add_flag("--allow-large", allow_large);

  std::vector<std::pair<CLI::App*, CatalanKind>> cats;
  for (auto [nm, kind] : {std::pair{"catalan", CatalanKind::catalan}, std::pair{"narayana", CatalanKind::narayana}, std::pair{"kirkman", CatalanKind::kirkman}}) {
    auto* sc = app.add_subcommand(nm, std::string("q-") + nm + " numbers at t = -q^p");
    sc->add_option("--group", group)->required();
    sc->add_option("--p", p)->required();
    sc->add_option("--r", r);
    sc->add_flag("--unchecked", unchecked, "Allow p not 1 mod h");
    cats.emplace_back(sc, kind);
  }

  auto* cluster = app.add_subcommand("cluster", "Cluster f- and h-vectors against Fomin-Reading");
  cluster->add_option("--group", group)->required();

  auto* identity = app.add_subcommand("identity", "Series identities");
  identity->require_subcommand(1);
  auto* h2f = identity->add_subcommand("h-to-f", "sum s^r f_r = sum (-sq;q^a)_r h_r");
  h2f->add_option("--n", n)->required();
  h2f->add_option("--e1", e1)->required();
  h2f->add_option("--a", a)->required();
  h2f->add_option("--cap", capl)->required();

  auto* rank2 = app.add_subcommand("rank2", "Rank 2 basis verification");
  rank2->add_option("--group", group)->required();
  rank2->add_flag("--any", any, "Skip the irreducible duality requirement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (glist->parsed()) return cmd_groups_list(g);
    if (gcheck->parsed()) return cmd_groups_check(g, group, max_order);
    if (hilb->parsed()) return cmd_hilb(g, group, r, cap);
    if (formula->parsed()) return cmd_formula(g, group, ri);
    if (verify->parsed()) return cmd_verify(g, group, allow_large);
    if (vall->parsed()) return cmd_verify_all(g, max_order, allow_large);
    for (const auto& [sc, kind] : cats) {
      if (sc->parsed()) return cmd_catalan(g, kind, group, p, r, unchecked);
    }
    if (cluster->parsed()) return cmd_cluster(g, group);
    if (h2f->parsed()) return cmd_h_to_f(g, n, e1, a, capl);
    if (rank2->parsed()) return cmd_rank2(g, group, any);
  } catch (const UnknownGroup& e) {
    return fail(g, 2, "unknown_group", e.what());
  } catch (const VerificationFailure& e) {
    return fail(g, 1, "verification_failure", e.what());
  } catch (const Error& e) {
    return fail(g, 2, "invalid_input", e.what());
  }
  return 2;
}
