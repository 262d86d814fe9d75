#include "reflectia/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "reflectia/error.hpp"

namespace reflectia {

namespace qpoly {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

void reduce_monic(Poly& a, const std::vector<long>& mod) {
  const std::size_t deg = mod.size() - 1;
  for (std::size_t top = a.size(); top-- > deg;) {
    if (a[top].is_zero()) continue;
    const Rational lead = a[top];
    const std::size_t shift = top - deg;
    for (std::size_t k = 0; k < deg; ++k) {
      if (mod[k] != 0) a[shift + k] -= lead * Rational(mod[k]);
    }
    a[top] = Rational(0);
  }
  if (a.size() > deg) a.resize(deg);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly bb = b;
  trim(bb);
  if (bb.empty()) throw DivisionByZero();
  Poly r = a;
  trim(r);
  if (r.size() < bb.size()) return {Poly{}, r};
  Poly q(r.size() - bb.size() + 1);
  const Rational lead_inv = bb.back().inverse();
  const long db = static_cast<long>(bb.size()) - 1;
  for (long top = static_cast<long>(r.size()) - 1; top >= db; --top) {
    if (r[static_cast<std::size_t>(top)].is_zero()) continue;
    const Rational f = r[static_cast<std::size_t>(top)] * lead_inv;
    const auto shift = static_cast<std::size_t>(top - db);
    q[shift] = f;
    for (std::size_t k = 0; k < bb.size(); ++k) r[shift + k] -= f * bb[k];
  }
  trim(q);
  trim(r);
  return {q, r};
}

}  // namespace qpoly

namespace {

std::vector<long> int_poly_div_exact(const std::vector<long>& a, const std::vector<long>& monic) {
  std::vector<long> r = a;
  const std::size_t db = monic.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t top = r.size(); top-- > db;) {
    const long f = r[top];
    q[top - db] = f;
    if (f == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) r[top - db + k] -= f * monic[k];
  }
  return q;
}

struct PhiCache {
  std::mutex mu;
  std::map<int, std::unique_ptr<const std::vector<long>>> table;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

std::vector<long> compute_phi(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = int_poly_div_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw InvalidArgument("cyclotomic order must be positive");
  PhiCache& cache = phi_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.table.find(m);
    if (it != cache.table.end()) return *it->second;
  }
  // Computed outside the lock: recursion takes the lock again for divisors.
  auto value = std::make_unique<const std::vector<long>>(compute_phi(m));
  std::lock_guard<std::mutex> lock(cache.mu);
  auto [it, inserted] = cache.table.emplace(m, std::move(value));
  return *it->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

long lcm_int(long a, long b) { return std::lcm(a, b); }

Cyclotomic::Cyclotomic(const Rational& r, int m) : m_(m), c_(static_cast<std::size_t>(euler_phi(m))) { c_[0] = r; }

Cyclotomic Cyclotomic::reduce(int m, std::vector<Rational> poly) {
  // Fold x^m = 1 first, then reduce modulo Phi_m.
  if (poly.size() > static_cast<std::size_t>(m)) {
    for (std::size_t k = static_cast<std::size_t>(m); k < poly.size(); ++k) {
      if (!poly[k].is_zero()) poly[k % static_cast<std::size_t>(m)] += poly[k];
    }
    poly.resize(static_cast<std::size_t>(m));
  }
  const auto& phi = cyclotomic_polynomial(m);
  qpoly::reduce_monic(poly, phi);
  poly.resize(phi.size() - 1);
  return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::zeta(int m, long power) {
  if (m < 1) throw InvalidArgument("cyclotomic order must be positive");
  long p = power % m;
  if (p < 0) p += m;
  std::vector<Rational> poly(static_cast<std::size_t>(p) + 1);
  poly[static_cast<std::size_t>(p)] = Rational(1);
  return reduce(m, std::move(poly));
}

Cyclotomic Cyclotomic::from_coeffs(int m, std::vector<Rational> coeffs) {
  const std::size_t phi = static_cast<std::size_t>(euler_phi(m));
  if (coeffs.size() > phi) return reduce(m, std::move(coeffs));
  coeffs.resize(phi);
  return Cyclotomic(m, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && c_[0] == Rational(1); }

const Rational& Cyclotomic::rational_value() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic value is not rational: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::embed(int M) const {
  if (M == m_) return *this;
  if (M % m_ != 0) throw InvalidArgument("cannot embed Q(zeta_" + std::to_string(m_) + ") into Q(zeta_" + std::to_string(M) + ")");
  const std::size_t step = static_cast<std::size_t>(M / m_);
  std::vector<Rational> poly((c_.size() - 1) * step + 1);
  for (std::size_t k = 0; k < c_.size(); ++k) poly[k * step] = c_[k];
  return reduce(M, std::move(poly));
}

Cyclotomic Cyclotomic::simplified() const {
  if (m_ != 1 && is_rational()) return Cyclotomic(c_[0], 1);
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> poly(static_cast<std::size_t>(m_));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    poly[(static_cast<std::size_t>(m_) - k) % static_cast<std::size_t>(m_)] += c_[k];
  }
  return reduce(m_, std::move(poly));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Cyclotomic(c_[0].inverse(), m_);
  // Extended Euclid: track s with s * a == r (mod Phi_m).
  const auto& phi = cyclotomic_polynomial(m_);
  qpoly::Poly r0(phi.begin(), phi.end());
  qpoly::Poly r1(c_.begin(), c_.end());
  qpoly::trim(r1);
  qpoly::Poly s0;
  qpoly::Poly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = qpoly::divmod(r0, r1);
    qpoly::Poly qs = qpoly::mul(q, s1);
    qpoly::Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    qpoly::trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Phi_m is irreducible, so the last remainder is a nonzero constant.
  const Rational c = r1.at(0).inverse();
  for (auto& x : s1) x *= c;
  return reduce(m_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this;
  Cyclotomic acc(Rational(1), m_);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    const int M = static_cast<int>(lcm_int(m_, o.m_));
    *this = embed(M);
    return *this += o.embed(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    const int M = static_cast<int>(lcm_int(m_, o.m_));
    *this = embed(M);
    return *this -= o.embed(M);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    const int M = static_cast<int>(lcm_int(m_, o.m_));
    *this = embed(M);
    return *this *= o.embed(M);
  }
  if (o.is_rational()) {
    const Rational f = o.c_[0];
    for (auto& x : c_) x *= f;
    return *this;
  }
  if (is_rational()) {
    const Rational f = c_[0];
    c_ = o.c_;
    for (auto& x : c_) x *= f;
    return *this;
  }
  std::vector<Rational> prod(2 * c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = reduce(m_, std::move(prod));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  const int M = static_cast<int>(lcm_int(a.m_, b.m_));
  return a.embed(M).c_ == b.embed(M).c_;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = static_cast<std::size_t>(m_);
  for (const auto& x : c_) h = h * 1000003u ^ x.hash();
  return h;
}

std::pair<double, double> Cyclotomic::approx() const {
  double re = 0;
  double im = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const double ang = 2 * M_PI * static_cast<double>(k) / m_;
    re += c_[k].to_double() * std::cos(ang);
    im += c_[k].to_double() * std::sin(ang);
  }
  return {re, im};
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[k].is_integer()) {
      os << c_[k].num().get_str();
    } else {
      os << c_[k];
    }
    if (k > 0) os << "*z" << m_ << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

}  // namespace reflectia
