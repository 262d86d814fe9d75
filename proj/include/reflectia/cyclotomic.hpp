#pragma once

// Elements of the cyclotomic field Q(zeta_m), stored as the residue of a
// polynomial in zeta_m modulo the m-th cyclotomic polynomial Phi_m.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "reflectia/rational.hpp"

namespace reflectia {

// Integer coefficients of Phi_m, lowest degree first. Cached per m; safe to
// call from several threads.
const std::vector<long>& cyclotomic_polynomial(int m);
int euler_phi(int m);
long lcm_int(long a, long b);

class Cyclotomic {
 public:
  // Zero of Q = Q(zeta_1).
  Cyclotomic() : m_(1), c_(1) {}
  Cyclotomic(const Rational& r, int m = 1);  // NOLINT: rationals embed implicitly
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}  // NOLINT

  // zeta_m^power.
  static Cyclotomic zeta(int m, long power);
  // Coefficients in the power basis 1, zeta, ..., zeta^{phi(m)-1}; padded or
  // checked against phi(m).
  static Cyclotomic from_coeffs(int m, std::vector<Rational> coeffs);

  int order() const { return m_; }
  std::span<const Rational> coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational().
  const Rational& rational_value() const;

  // Image under Q(zeta_m) -> Q(zeta_M); requires m | M.
  Cyclotomic embed(int M) const;
  // Smallest m' | m with the value inside Q(zeta_m'), restricted to m' = 1 or
  // m' = m unless a smaller order is cheap to detect (rational values).
  Cyclotomic simplified() const;

  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  // Field equality: both sides are embedded into the lcm before comparing.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Hash of the (m, coeffs) pair. Equal values at different orders may hash
  // differently; callers hash within one field.
  std::size_t hash() const;

  // Complex value, for diagnostics and numeric cross-checks only.
  std::pair<double, double> approx() const;
  std::string str() const;

 private:
  Cyclotomic(int m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  static Cyclotomic reduce(int m, std::vector<Rational> poly);

  int m_;
  std::vector<Rational> c_;
};

// Dense polynomial helpers over Q used by the cyclotomic code and elsewhere.
namespace qpoly {
using Poly = std::vector<Rational>;
void trim(Poly& p);
Poly mul(const Poly& a, const Poly& b);
// Remainder of a modulo the monic integer polynomial mod.
void reduce_monic(Poly& a, const std::vector<long>& mod);
// Returns (quotient, remainder) of a by b over Q; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
}  // namespace qpoly

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace reflectia

template <>
struct std::hash<reflectia::Cyclotomic> {
  std::size_t operator()(const reflectia::Cyclotomic& c) const { return c.hash(); }
};
