#include <random>

#include "doctest.h"

#include "reflectia/derivforms.hpp"
#include "reflectia/enumerate.hpp"
#include "reflectia/error.hpp"
#include "reflectia/groups.hpp"

using namespace reflectia;

namespace {

// Coefficients in Q(i) with small parts, so |c|^2 stays rational.
Cyclotomic gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  return Cyclotomic(c(rng)) + Cyclotomic(c(rng)) * Cyclotomic::zeta(4, 1);
}

MultiPoly random_homogeneous(std::mt19937& rng, int n, int deg) {
  MultiPoly f(n);
  while (f.is_zero()) {
    for (int k = 0; k < 4; ++k) {
      Exponent a(static_cast<std::size_t>(n), 0);
      int left = deg;
      for (int i = 0; i + 1 < n; ++i) {
        a[static_cast<std::size_t>(i)] = std::uniform_int_distribution<int>(0, left)(rng);
        left -= a[static_cast<std::size_t>(i)];
      }
      a[static_cast<std::size_t>(n - 1)] = left;
      f.add_term(a, gaussian(rng));
    }
  }
  return f;
}

Derivation random_derivation(std::mt19937& rng, int n, int deg) {
  Derivation th;
  for (int j = 0; j < n; ++j) th.push_back(random_homogeneous(rng, n, deg));
  return th;
}

GroupElements elements_of(const std::string& name) { return generate(resolve_group(name)).elements; }

}  // namespace

TEST_CASE("polynomial basics") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly f = x * x * y + Cyclotomic(3) * y;
  CHECK(f.degree() == 3);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(f.partial(0) == Cyclotomic(2) * x * y);
  CHECK(f.partial(1) == x * x + MultiPoly::constant(2, Cyclotomic(3)));
  CHECK(MultiPoly(2).degree() == -1);
  // d/dx (x^2 y) applied as an operator: (x y)(dx, dy) (x^2 y) = 2x
  CHECK((x * y).apply_as_operator(x * x * y) == Cyclotomic(2) * x);
  Cyclotomic c;
  CHECK((Cyclotomic(5) * f).proportional(f, &c));
  CHECK(c == Cyclotomic(5));
  CHECK_FALSE((f + x).proportional(f));
}

TEST_CASE("arrangement polynomials") {
  const MultiPoly q1 = arrangement_Q(elements_of("G(2,1,1)"));
  CHECK(q1 == MultiPoly::variable(1, 0));

  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly qa = arrangement_Q(elements_of("G(1,1,2)"));
  CHECK(qa.proportional(x - y));
  CHECK(count_hyperplanes(elements_of("G(1,1,2)")) == 1);

  const MultiPoly qb = arrangement_Q(elements_of("G(2,1,2)"));
  CHECK(qb.degree() == 4);
  CHECK(qb.proportional(x * y * (x - y) * (x + y)));
}

TEST_CASE("Euler operator is the exterior derivative") {
  std::mt19937 rng(17);
  for (int i = 0; i < 10; ++i) {
    const int n = 2 + i % 2, deg = 1 + i % 4;
    const MultiPoly f = random_homogeneous(rng, n, deg);
    const MixedForm df = apply_theta_tilde(euler_derivation(n), MixedForm::from(f, 0, 0));
    for (int j = 0; j < n; ++j) CHECK(df.component(1u << j, 0) == f.partial(j));
    CHECK(contract_euler(df) == MixedForm::from(Cyclotomic(deg) * f, 0, 0));
  }
}

TEST_CASE("conj(h)(d) h is positive") {
  std::mt19937 rng(23);
  for (int i = 0; i < 20; ++i) {
    const MultiPoly h = random_homogeneous(rng, 2, i % 6);
    const MultiPoly v = h.conj().apply_as_operator(h);
    REQUIRE(v.degree() == 0);
    const Cyclotomic c = v.coeff({0, 0});
    REQUIRE(c.is_rational());
    CHECK(Rational(0) < c.rational_value());
  }
}

TEST_CASE("theta~ is equivariant") {
  std::mt19937 rng(29);
  for (const char* name : {"G(2,1,2)", "G4", "G(3,1,2)"}) {
    const GroupSpec g = resolve_group(name);
    REQUIRE(g.unitary);
    for (const auto& m : g.generators) {
      const Derivation th = random_derivation(rng, 2, 2);
      MixedForm om = MixedForm::from(random_homogeneous(rng, 2, 3), 0, 2);
      om += MixedForm::from(random_homogeneous(rng, 2, 2), 1, 1);
      const MixedForm lhs = act(m, apply_theta_tilde(th, om));
      const MixedForm rhs = apply_theta_tilde(act(m, th), act(m, om));
      CHECK_MESSAGE(lhs == rhs, name);
    }
  }
}

TEST_CASE("arrangement degree and relative invariance") {
  for (const char* name : {"G(2,1,2)", "G(3,3,2)", "G4", "G5", "G(4,2,2)"}) {
    const GroupSpec g = resolve_group(name);
    const Enumeration en = generate(g);
    const MultiPoly q = arrangement_Q(en.elements);
    CHECK(q.degree() == count_hyperplanes(en.elements));
    CHECK(q.is_homogeneous());
    for (const auto& m : g.generators) {
      Cyclotomic c;
      REQUIRE(act(m, q).proportional(q, &c));
      CHECK_MESSAGE(c == m.det().inverse(), name);
    }
  }
}

TEST_CASE("rank 2 verification") {
  for (const char* name : {"G4", "G(3,1,2)", "G(4,4,2)"}) {
    const Rank2Report rep = rank2_verify(resolve_group(name));
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.ok, name << " " << c.name << " " << c.detail);
    CHECK(rep.ok());
    CHECK(rep.degQ == rep.hyperplanes);
    CHECK_FALSE(rep.kappa.is_zero());
    CHECK(rep.to_json()["group"] == name);
  }
}

TEST_CASE("rank 2 verification refuses") {
  CHECK_THROWS_AS(rank2_verify(resolve_group("G7")), InvalidArgument);
  CHECK(rank2_verify(resolve_group("G7"), false).ok());
  CHECK_THROWS_AS(rank2_verify(resolve_group("G(2,1,3)")), InvalidArgument);
  const GroupSpec i5 = build_coxeter_type("I2(5)");
  if (!i5.unitary) CHECK_THROWS_AS(rank2_verify(i5), InvalidArgument);
  GroupSpec b2 = build_monomial(2, 1, 2);
  b2.unitary = false;
  CHECK_THROWS_AS(rank2_verify(b2), InvalidArgument);
}
