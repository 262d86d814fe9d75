#include <sstream>

#include "reflectia/derivforms.hpp"
#include "reflectia/error.hpp"
#include "reflectia/molien.hpp"

namespace reflectia {

namespace {

using Row = std::vector<Cyclotomic>;

// Normalized defining forms of the reflecting hyperplanes, one per hyperplane.
std::vector<Row> hyperplane_forms(const GroupElements& elems) {
  std::vector<Row> forms;
  const int n = elems.n();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const CycMatrix w = elems.element(i);
    if (!is_reflection(w)) continue;
    // Rows of w - 1 vanish on the fixed hyperplane; any nonzero one defines it.
    Row row;
    for (int r = 0; r < n && row.empty(); ++r) {
      Row cand(static_cast<std::size_t>(n));
      bool nonzero = false;
      for (int k = 0; k < n; ++k) {
        cand[static_cast<std::size_t>(k)] = w.at(r, k) - (r == k ? Cyclotomic(1) : Cyclotomic());
        nonzero = nonzero || !cand[static_cast<std::size_t>(k)].is_zero();
      }
      if (nonzero) row = std::move(cand);
    }
    Cyclotomic lead;
    for (const auto& c : row) {
      if (!c.is_zero()) {
        lead = c;
        break;
      }
    }
    for (auto& c : row) c = (c / lead).simplified();
    bool seen = false;
    for (const auto& f : forms) {
      if (f == row) {
        seen = true;
        break;
      }
    }
    if (!seen) forms.push_back(std::move(row));
  }
  return forms;
}

MultiPoly linear_form(const Row& row) {
  const int n = static_cast<int>(row.size());
  MultiPoly p(n);
  for (int k = 0; k < n; ++k) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = 1;
    p.add_term(e, row[static_cast<std::size_t>(k)]);
  }
  return p;
}

}  // namespace

MultiPoly arrangement_Q(const GroupElements& elems) {
  const int n = elems.n();
  MultiPoly q = MultiPoly::constant(n, Cyclotomic(1));
  for (const auto& row : hyperplane_forms(elems)) q = q * linear_form(row);
  if (q.is_zero()) return q;
  const Cyclotomic top = q.terms().rbegin()->second;
  return top.inverse() * q;
}

int count_hyperplanes(const GroupElements& elems) { return static_cast<int>(hyperplane_forms(elems).size()); }

bool Rank2Report::ok() const {
  if (checks.empty()) return false;
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

nlohmann::json Rank2Report::to_json() const {
  nlohmann::json j;
  j["group"] = group;
  j["deg_Q"] = degQ;
  j["hyperplanes"] = hyperplanes;
  j["scalar"] = scalar.str();
  j["kappa"] = kappa.str();
  j["ok"] = ok();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}, {"witness", c.witness}});
  j["checks"] = cs;
  return j;
}

Rank2Report rank2_verify(const GroupSpec& spec, bool require_duality) {
  if (spec.n != 2) throw InvalidArgument(spec.name + ": rank 2 verification needs a rank 2 group");
  if (!spec.unitary) throw InvalidArgument(spec.name + ": rank 2 verification needs unitary generators");
  const Enumeration en = generate(spec);
  const MolienResult mol = analyse(en, 2);
  if (require_duality && !(mol.profile.irreducible && mol.profile.duality)) {
    throw InvalidArgument(spec.name + " is not an irreducible duality group");
  }

  Rank2Report rep;
  rep.group = spec.name;
  auto check = [&rep](std::string name, bool ok, std::string detail, std::string witness) {
    rep.checks.push_back({std::move(name), ok, std::move(detail), std::move(witness)});
  };

  const MultiPoly Q = arrangement_Q(en.elements);
  rep.hyperplanes = count_hyperplanes(en.elements);
  rep.degQ = Q.degree();
  check("deg_Q", Q.is_homogeneous() && rep.degQ == rep.hyperplanes && rep.degQ == mol.profile.Nstar,
        "deg Q " + std::to_string(rep.degQ) + ", N* " + std::to_string(mol.profile.Nstar), Q.digest());

  const std::uint32_t Y12 = 0b11;
  const MixedForm QY = MixedForm::from(Q, 0, Y12);
  bool rel = true;
  for (const auto& g : spec.generators) rel = rel && act(g, Q) == g.det().inverse() * Q;
  check("relative_invariant", rel, "g.Q = det(g)^-1 Q for every generator", Q.digest());

  const Derivation theta1 = euler_derivation(2);
  const Derivation theta2{Cyclotomic(-1) * Q.partial(1), Q.partial(0)};
  const MixedForm saito = wedge({theta1, theta2});
  check("wedge", saito == Cyclotomic(rep.degQ) * QY, "theta_1 ^ theta_2 = deg(Q) Q y1^y2", saito.digest());

  // (i) conj(Q)(d)(Q) != 0 and the top form it produces.
  rep.scalar = Q.conj().apply_as_operator(Q).coeff({0, 0});
  const MixedForm omega1 = apply_theta_tilde(theta1, QY);
  const MixedForm omega2 = apply_theta_tilde(theta2, QY);
  const MixedForm top12 = apply_theta_tilde(theta1, omega2);
  const MixedForm top21 = apply_theta_tilde(theta2, omega1);
  MixedForm expected_top(2);
  expected_top.add_term({0, 0}, 0b11, Y12, Cyclotomic(rep.degQ) * rep.scalar);
  check("i_scalar", !rep.scalar.is_zero() && top12 == expected_top && top21 == Cyclotomic(-1) * top12,
        "conj(Q)(d)(Q) = " + rep.scalar.str() + "; theta~_1 theta~_2 (Q y12) = deg(Q) times it on x1^x2 y1^y2", top12.digest());

  // (ii) omega_1 = dQ, omega_2 by its two slots; det = deg(Q) Q after dividing out kappa.
  const MultiPoly slot1 = omega2.component(0b01, Y12);
  const MultiPoly slot2 = omega2.component(0b10, Y12);
  rep.kappa = slot2.coeff({1, 0});
  const bool dq = omega1.component(0b01, Y12) == Q.partial(0) && omega1.component(0b10, Y12) == Q.partial(1);
  const MultiPoly det = Q.partial(0) * slot2 - Q.partial(1) * slot1;
  const bool det_ok = !rep.kappa.is_zero() && rep.kappa.inverse() * det == Cyclotomic(rep.degQ) * Q;
  check("ii_determinant", dq && det_ok, "det [[dQ/dx1, dQ/dx2], [omega_2 slots]] / kappa = deg(Q) Q", det.digest());

  // (iii) omega_2 = kappa (x1 (x) x2 - x2 (x) x1) (x) y1^y2.
  MixedForm expected2(2);
  expected2.add_term({1, 0}, 0b10, Y12, rep.kappa);
  expected2.add_term({0, 1}, 0b01, Y12, -rep.kappa);
  check("iii_omega2_line", !rep.kappa.is_zero() && omega2 == expected2, "kappa = " + rep.kappa.str(), omega2.digest());

  // (iv) invariance under every generator.
  bool inv = true;
  for (const auto& g : spec.generators) {
    inv = inv && act(g, saito) == saito && act(g, omega1) == omega1 && act(g, omega2) == omega2;
  }
  check("iv_invariance", inv, "theta_1^theta_2, omega_1, omega_2 fixed by every generator", omega1.digest());
  return rep;
}

}  // namespace reflectia
