#include "doctest.h"
#include "helpers.hpp"

#include "reflectia/enumerate.hpp"
#include "reflectia/error.hpp"
#include "reflectia/formulas.hpp"
#include "reflectia/molien.hpp"
#include "reflectia/qcomb.hpp"
#include "reflectia/table_expr.hpp"

using namespace reflectia;
using testing::qlist;
using testing::series;

namespace {

MolienResult run(const std::string& name) {
  const GroupSpec g = resolve_group(name);
  return analyse(generate(g), g.n);
}

}  // namespace

TEST_CASE("Z/2 by hand") {
  const Enumeration en = generate(build_monomial(2, 1, 1));
  const QTSLaurent h = brute_hilbert(en.buckets, 2, 3);
  CHECK(h == series({{0, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {2, 0, 0, 1}, {2, 1, 1, 1}, {3, 1, 0, 1}, {3, 0, 1, 1}}).truncate(3));
}

TEST_CASE("trivial group on a line") {
  GroupSpec g;
  g.name = "trivial";
  g.n = 1;
  const Enumeration en = generate(g);
  const QTSLaurent h = brute_hilbert(en.buckets, 1, 6);
  const QTSLaurent expect = RationalForm(series({{0, 0, 0, 1}, {0, 1, 0, 1}}) * series({{0, 0, 0, 1}, {0, 0, 1, 1}}), {1}).expand(6);
  CHECK(h == expect);
}

TEST_CASE("symmetric polynomials") {
  const Enumeration en = generate(build_monomial(1, 1, 3));
  const QTSLaurent h = brute_hilbert(en.buckets, 6, 12);
  CHECK(QTSLaurent::from_slice(h.slice(0, 0)).truncate(12) == RationalForm(QTSLaurent(Rational(1)), {1, 2, 3}).expand(12));
}

TEST_CASE("boundary slices") {
  for (const char* name : {"B2", "G4", "G(3,3,3)", "G24", "H3"}) {
    const auto res = run(name);
    const auto& p = res.profile;
    QTSLaurent solomon(Rational(1)), top(Rational(1));
    for (int e : p.exponents) solomon = solomon * series({{0, 0, 0, 1}, {e, 1, 0, 1}});
    for (int e : p.coexponents) top = top * series({{e, 0, 0, 1}, {0, 1, 0, 1}});
    CHECK_MESSAGE(res.nu.front() == solomon, name);
    CHECK_MESSAGE(res.nu.back() == top, name);
  }
}

TEST_CASE("G24 nu_2 against its table row") {
  const auto res = run("G24");
  // (q+t) [3]_{q^2} ((q^6+t^2)(q^3-q^7+q^9) + t(1-q^2+q^6+q^12))
  const QTSLaurent a = series({{1, 0, 0, 1}, {0, 1, 0, 1}});
  const QTSLaurent b = qinteger(3, 2);
  const QTSLaurent c = series({{6, 0, 0, 1}, {0, 2, 0, 1}}) * qlist({0, 0, 0, 1, 0, 0, 0, -1, 0, 1});
  const QTSLaurent d = series({{0, 1, 0, 1}, {2, 1, 0, -1}, {6, 1, 0, 1}, {12, 1, 0, 1}});
  CHECK(res.nu.at(2) == a * b * (c + d));
  bool found = false;
  for (const auto& t : tables_for("G24")) {
    if (t.r == 2) {
      CHECK(table_expr(t.expr) == res.nu.at(2));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("psi") {
  CHECK(psi_from_nu(qlist({0, 0, 0, 0, 0, 1}), 0) == 5);
  const auto b2 = run("B2");
  CHECK(psi_from_nu(b2.nu.at(1), 1) == 8);
  CHECK(psi_from_nu(b2.nu.at(0), 0) == 0);
}

TEST_CASE("bucket sums equal element sums") {
  for (const char* name : {"B2", "G4", "G(3,1,2)", "A3", "G(4,2,2)", "G12"}) {
    const GroupSpec g = resolve_group(name);
    const Enumeration en = generate(g);
    REQUIRE(en.elements.size() <= 200);
    CHECK_MESSAGE(brute_hilbert(en.buckets, en.elements.size(), 12) == brute_hilbert_elementwise(en.elements, 12), name);
    CHECK(brute_hilbert(en.buckets, en.elements.size(), 12, ExecMode::serial) == brute_hilbert(en.buckets, en.elements.size(), 12));
  }
}

TEST_CASE("coefficients are dimensions") {
  for (const char* name : {"G5", "G(4,1,3)", "D4"}) {
    const auto res = run(name);
    CHECK(res.series.nonnegative_integer_coefficients());
    CHECK(res.series.coeff(0, 0, 0) == Rational(1));
  }
}

TEST_CASE("universal slice identities and Gutkin-Opdam") {
  for (const char* name : {"G(2,2,2)", "G(2,2,3)", "G(2,2,4)", "G(3,3,3)", "G(4,2,2)", "G7", "G12", "B3", "G26"}) {
    const auto res = run(name);
    for (const auto& c : slice_checks(res, res.profile)) CHECK_MESSAGE(c.ok, name << " " << c.name);
    const int n = res.profile.n;
    for (int r = 0; r <= n; ++r) {
      for (int k = 0; k <= n; ++k) {
        CHECK_MESSAGE(psi_from_nu(res.nu.at(static_cast<std::size_t>(r)), k) ==
                          gutkin_opdam(n, k, r, static_cast<int>(res.reflections), res.profile.Nstar),
                      name << " k=" << k << " r=" << r);
      }
    }
  }
}

TEST_CASE("nu extraction needs a guard band") {
  const auto res = run("B2");
  CHECK_THROWS_AS(nu_extract(res.series.truncate(5), res.profile, 1), CapExceeded);
  CHECK(nu_extract(res.series, res.profile, 1) == res.nu.at(1));
}

TEST_CASE("recovery refuses a short series") {
  const auto res = run("G4");
  CHECK_THROWS_AS(recover_numerology(res.series.truncate(4), 2), CapExceeded);
}
