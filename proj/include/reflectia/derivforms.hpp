#pragma once

// Polynomials in x_1..x_n over cyclotomic fields, mixed forms in
// S(V*) (x) wedge V* (x) wedge V, the differential operators theta~ built
// from derivations, and the rank 2 basis verification.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "reflectia/enumerate.hpp"
#include "reflectia/groups.hpp"

namespace reflectia {

using Exponent = std::vector<int>;

class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : n_(nvars) {}
  static MultiPoly constant(int nvars, const Cyclotomic& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponent& alpha, const Cyclotomic& c);

  int nvars() const { return n_; }
  const std::map<Exponent, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coeff(const Exponent& alpha) const;
  void add_term(const Exponent& alpha, const Cyclotomic& c);

  bool is_zero() const { return terms_.empty(); }
  // Largest total degree, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  MultiPoly partial(int i) const;
  MultiPoly conj() const;
  // this(d/dx_1, ..., d/dx_n) applied to f, without conjugation.
  MultiPoly apply_as_operator(const MultiPoly& f) const;
  // x_i -> sum_k a(i,k) x_k.
  MultiPoly substitute_linear(const CycMatrix& a) const;
  // c with *this == c * other, if it exists (other nonzero).
  bool proportional(const MultiPoly& other, Cyclotomic* c = nullptr) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Cyclotomic& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const;
  // Stable short digest of str().
  std::string digest() const;

 private:
  int n_;
  std::map<Exponent, Cyclotomic> terms_;
};

// Subsets of [n] as bitmasks; x_K and y_R are wedges in increasing order.
class MixedForm {
 public:
  using Key = std::tuple<Exponent, std::uint32_t, std::uint32_t>;

  explicit MixedForm(int nvars = 0) : n_(nvars) {}
  // f (x) x_K (x) y_R.
  static MixedForm from(const MultiPoly& f, std::uint32_t K, std::uint32_t R);

  int nvars() const { return n_; }
  const std::map<Key, Cyclotomic>& terms() const { return terms_; }
  void add_term(const Exponent& alpha, std::uint32_t K, std::uint32_t R, const Cyclotomic& c);
  bool is_zero() const { return terms_.empty(); }
  // Polynomial coefficient of x_K (x) y_R.
  MultiPoly component(std::uint32_t K, std::uint32_t R) const;

  MixedForm& operator+=(const MixedForm& o);
  friend MixedForm operator+(MixedForm a, const MixedForm& b) { return a += b; }
  friend MixedForm operator*(const Cyclotomic& c, const MixedForm& a);
  friend bool operator==(const MixedForm& a, const MixedForm& b);
  friend bool operator!=(const MixedForm& a, const MixedForm& b) { return !(a == b); }

  std::string str() const;
  std::string digest() const;

 private:
  int n_;
  std::map<Key, Cyclotomic> terms_;
};

// theta = sum_j h[j] (x) y_j.
using Derivation = std::vector<MultiPoly>;

Derivation euler_derivation(int n);
MixedForm as_form(const Derivation& theta);
// theta_1 ^ ... ^ theta_k in S (x) wedge^0 (x) wedge^k V.
MixedForm wedge(const std::vector<Derivation>& thetas);
// f (x) eta (x) eta' -> sum_j conj(h_j)(d/dx)(f) (x) x_j ^ eta (x) eta'.
MixedForm apply_theta_tilde(const Derivation& theta, const MixedForm& omega);
// sum_j g_j (x) x_j (x) eta' -> sum_j x_j g_j (x) 1 (x) eta'; inverse of the
// exterior derivative up to the Euler factor.
MixedForm contract_euler(const MixedForm& omega);

// g acts on V by its matrix, on V* contragrediently: x_i -> sum_k
// (g^{-1})_{ik} x_k and y_j -> sum_i g_{ij} y_i.
MultiPoly act(const CycMatrix& g, const MultiPoly& f);
MixedForm act(const CycMatrix& g, const MixedForm& omega);
Derivation act(const CycMatrix& g, const Derivation& theta);

// Product of the reflecting hyperplane forms, one per hyperplane, scaled so
// that its largest monomial has coefficient 1.
MultiPoly arrangement_Q(const GroupElements& elems);
int count_hyperplanes(const GroupElements& elems);

struct Rank2Check {
  std::string name;
  bool ok = false;
  std::string detail;
  // Digest of the polynomial or form the check is about.
  std::string witness;
};

struct Rank2Report {
  std::string group;
  int degQ = 0;
  int hyperplanes = 0;
  Cyclotomic scalar;  // conj(Q)(d/dx)(Q)
  Cyclotomic kappa;   // omega_2 = kappa (x_1 (x) x_2 - x_2 (x) x_1) (x) y_1 ^ y_2
  std::vector<Rank2Check> checks;
  bool ok() const;
  nlohmann::json to_json() const;
};

// theta_1 = Euler, theta_2 = -dQ/dx_2 (x) y_1 + dQ/dx_1 (x) y_2 and
// omega_i = theta~_i(Q (x) 1 (x) y_1 ^ y_2). Requires rank 2 and a unitary
// spec; with require_duality, also an irreducible duality group.
Rank2Report rank2_verify(const GroupSpec& spec, bool require_duality = true);

}  // namespace reflectia
