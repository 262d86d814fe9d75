#include <cstdlib>
#include <fstream>
#include <set>

#include "doctest.h"

#include "reflectia/enumerate.hpp"
#include "reflectia/error.hpp"
#include "reflectia/groups.hpp"
#include "reflectia/molien.hpp"

using namespace reflectia;

namespace {

MolienResult run(const std::string& name) {
  const GroupSpec g = resolve_group(name);
  return analyse(generate(g), g.n);
}

std::set<std::vector<Cyclotomic>, bool (*)(const std::vector<Cyclotomic>&, const std::vector<Cyclotomic>&)> key_set() {
  return std::set<std::vector<Cyclotomic>, bool (*)(const std::vector<Cyclotomic>&, const std::vector<Cyclotomic>&)>(
      [](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] == b[i]) continue;
          return a[i].str() < b[i].str();
        }
        return false;
      });
}

}  // namespace

TEST_CASE("matrix basics") {
  const GroupSpec b2 = build_monomial(2, 1, 2);
  for (const auto& g : b2.generators) {
    CHECK((g * g.inverse()).is_identity());
    CHECK((g.conj_transpose() * g).is_identity());
    CHECK(is_reflection(g));
  }
  CHECK_FALSE(is_reflection(CycMatrix::identity(2, 1)));
  const CycMatrix rot = b2.generators[0] * b2.generators[1];
  CHECK_FALSE(is_reflection(rot));
  CHECK(rot.det() == Cyclotomic(1));
}

TEST_CASE("monomial family orders") {
  CHECK(generate(build_monomial(1, 1, 3)).elements.size() == 6);
  CHECK(generate(build_monomial(2, 1, 2)).elements.size() == 8);
  CHECK(generate(build_monomial(3, 3, 3)).elements.size() == 54);
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= p; ++q) {
      if (p % q != 0) continue;
      for (int n = 1; n <= 3; ++n) {
        if (p == 1 && n == 1) continue;
        const GroupSpec g = build_monomial(p, q, n);
        REQUIRE(g.expected_order);
        CHECK(generate(g).elements.size() == *g.expected_order);
        CHECK(g.unitary);
      }
    }
  }
}

TEST_CASE("Coxeter groups") {
  CHECK(generate(build_coxeter_type("A2")).elements.size() == 6);
  const auto h3 = run("H3");
  CHECK(h3.order == 120);
  CHECK(h3.profile.degrees == std::vector<int>{2, 6, 10});
  CHECK(h3.profile.coincidental);
  CHECK(*h3.profile.a == 4);
  const auto f4 = run("F4");
  CHECK(f4.order == 1152);
  CHECK(f4.profile.exponents == std::vector<int>{1, 5, 7, 11});
  CHECK_FALSE(build_coxeter_type("H3").unitary);
  CHECK_THROWS_AS(build_coxeter_type("Q7"), UnknownGroup);
}

TEST_CASE("catalog") {
  const auto names = catalog_names();
  CHECK(names.size() >= 28);
  const GroupSpec g24 = load_catalog("G24");
  CHECK(g24.n == 3);
  CHECK(*g24.expected_order == 336);
  const GroupSpec g4 = load_catalog("G4");
  CHECK(generate(g4).elements.size() == 24);
  CHECK(*g4.expected_degrees == std::vector<int>{4, 6});
  for (const auto& name : names) {
    const GroupSpec g = load_catalog(name);
    if (g.n == 2 || name == "G25" || name == "G26" || name == "G32") CHECK_MESSAGE(g.unitary, name);
    if (g.unitary) {
      for (const auto& m : g.generators) CHECK((m.conj_transpose() * m).is_identity());
    }
  }
  CHECK_THROWS_AS(load_catalog("G99"), UnknownGroup);
  CHECK_THROWS_AS(resolve_group("nonsense"), UnknownGroup);
}

TEST_CASE("catalog override and broken entries") {
  const std::string path = "/tmp/reflectia_test_catalog.json";
  {
    std::ofstream f(path);
    f << R"({"schema":1,"groups":[{"name":"Bad","n":2,"m":1,"unitary":false,"real":true,"source":"test",
      "generators":[[[["1"],["0"]],[["2"],["0"]]]]}]})";
  }
  CHECK(catalog_names(path) == std::vector<std::string>{"Bad"});
  CHECK_THROWS_AS(load_catalog("Bad", path), InvalidArgument);
}

TEST_CASE("enumeration and buckets") {
  GroupSpec trivial;
  trivial.name = "trivial";
  trivial.n = 1;
  const Enumeration t = generate(trivial);
  CHECK(t.elements.size() == 1);
  CHECK(t.buckets.size() == 1);

  const Enumeration b2 = generate(build_monomial(2, 1, 2));
  CHECK(b2.elements.size() == 8);
  // both reflection classes share x^2 - 1
  CHECK(b2.buckets.size() == 4);

  const Enumeration e6 = generate(build_coxeter_type("E6"));
  CHECK(e6.elements.size() == 51840);
  CHECK(e6.buckets.size() == 25);

  for (const char* name : {"G4", "G(4,2,3)", "B3", "G25"}) {
    const Enumeration en = generate(resolve_group(name));
    std::uint64_t total = 0;
    auto keys = key_set();
    for (const auto& b : en.buckets) {
      total += b.count;
      keys.insert(b.key);
      if (b.representative.is_identity()) CHECK(b.count == 1);
    }
    CHECK(total == en.elements.size());
    // inverse closure of the key multiset
    for (const auto& b : en.buckets) {
      const CycMatrix inv = b.representative.inverse();
      CHECK(keys.count(inv.charpoly()) == 1);
    }
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (const char* name : {"G8", "G(3,1,3)", "H3"}) {
    const GroupSpec g = resolve_group(name);
    GenerateOptions s;
    s.mode = ExecMode::serial;
    const Enumeration a = generate(g, s), b = generate(g);
    CHECK(a.elements.size() == b.elements.size());
    CHECK(a.buckets.size() == b.buckets.size());
  }
}

TEST_CASE("cap and size checks") {
  GenerateOptions small;
  small.cap = 10;
  CHECK_THROWS_AS(generate(build_coxeter_type("B3"), small), CapExceeded);
  GroupSpec wrong = build_monomial(2, 1, 2);
  wrong.expected_order = 9;
  CHECK_THROWS_AS(generate(wrong), VerificationFailure);
  CHECK_THROWS_AS(generate(build_coxeter_type("E8")), CapExceeded);
}

TEST_CASE("characteristic data") {
  const CharTriple id = char_data(CycMatrix::identity(2, 1));
  CHECK(id.one_minus_q == std::vector<Cyclotomic>{1, -2, 1});
  CHECK(id.one_plus_t == std::vector<Cyclotomic>{1, 2, 1});
  CHECK(id.one_plus_s_inv == std::vector<Cyclotomic>{1, 2, 1});
  const CharTriple d = char_data(CycMatrix::diagonal({Cyclotomic(-1), Cyclotomic(1)}, 1));
  CHECK(d.one_minus_q == std::vector<Cyclotomic>{1, 0, -1});
  CHECK(d.one_plus_t == std::vector<Cyclotomic>{1, 0, -1});
  CycMatrix swap(2, 1);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  const CharTriple sw = char_data(swap);
  CHECK(sw.one_minus_q == std::vector<Cyclotomic>{1, 0, -1});
  CHECK(sw.one_plus_t == std::vector<Cyclotomic>{1, 0, -1});
}

TEST_CASE("numerology recovery") {
  const auto b2 = run("B2");
  CHECK(b2.profile.degrees == std::vector<int>{2, 4});
  CHECK(b2.profile.coexponents == std::vector<int>{1, 3});
  CHECK(b2.profile.coincidental);
  CHECK(*b2.profile.a == 2);

  const auto g24 = run("G24");
  CHECK(g24.profile.exponents == std::vector<int>{3, 5, 13});
  CHECK(g24.profile.coexponents == std::vector<int>{1, 9, 11});
  CHECK(g24.profile.duality);
  CHECK_FALSE(g24.profile.coincidental);

  const auto g312 = run("G(3,1,2)");
  CHECK(g312.profile.exponents == std::vector<int>{2, 5});
  CHECK(g312.profile.coexponents == std::vector<int>{1, 4});
  CHECK(*g312.profile.a == 3);
  CHECK(g312.profile.e1 == 2);

  const auto g25 = run("G25");
  CHECK(g25.profile.degrees == std::vector<int>{6, 9, 12});
  CHECK(g25.profile.exponents == std::vector<int>{5, 8, 11});
}

TEST_CASE("G(de,e,n) degrees and coexponents") {
  // degrees de, 2de, ..., (n-1)de, dn; coexponents split on d = 1 or d >= 2
  for (auto [d, e, n] : std::vector<std::array<int, 3>>{{1, 2, 3}, {2, 2, 2}, {3, 1, 2}, {2, 1, 3}, {1, 3, 3}}) {
    const GroupSpec g = build_monomial(d * e, e, n);
    const auto res = analyse(generate(g), n);
    std::vector<int> deg;
    for (int i = 1; i < n; ++i) deg.push_back(i * d * e);
    deg.push_back(d * n);
    std::sort(deg.begin(), deg.end());
    CHECK(res.profile.degrees == deg);
    std::vector<int> co{1};
    if (d >= 2) {
      for (int i = 1; i < n; ++i) co.push_back(i * d * e + 1);
    } else {
      for (int i = 1; i < n - 1; ++i) co.push_back(i * e + 1);
      co.push_back((n - 1) * e - n + 1);
    }
    std::sort(co.begin(), co.end());
    CHECK(res.profile.coexponents == co);
    CHECK(res.profile == *g.expected_profile());
  }
}

TEST_CASE("real groups have equal exponents and coexponents") {
  for (const char* name : {"A3", "B3", "D4", "H3", "I2(7)", "F4"}) {
    const auto res = run(name);
    CHECK(res.profile.exponents == res.profile.coexponents);
  }
}

TEST_CASE("catalog numerology matches recovery") {
  for (const auto& name : catalog_names()) {
    const GroupSpec g = load_catalog(name);
    if (!g.expected_order || *g.expected_order > 20000) continue;
    const auto res = analyse(generate(g), g.n);
    CHECK_MESSAGE(res.profile == *g.expected_profile(), name);
  }
}
