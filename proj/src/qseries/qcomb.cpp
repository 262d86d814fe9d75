#include "reflectia/qcomb.hpp"

#include <optional>

#include "reflectia/error.hpp"

namespace reflectia {

QTSLaurent qpochhammer(const QMono& z, int b, int k) {
  if (k < 0) throw InvalidArgument("qpochhammer needs k >= 0");
  QTSLaurent acc(Rational(1));
  if (z.c.is_zero()) return acc;
  for (int i = 0; i < k; ++i) acc = acc - acc.times_monomial(z.c, z.q + i * b, z.t, z.s);
  return acc;
}

QTSLaurent qinteger(int m, int b) {
  QTSLaurent out;
  for (int i = 0; i < m; ++i) out.add(i * b, 0, 0, Rational(1));
  return out;
}

QTSLaurent qbinomial(int n, int r, int b) {
  if (r < 0 || r > n || n < 0) return QTSLaurent();
  if (b <= 0) throw InvalidArgument("qbinomial needs a positive base exponent");
  // Pascal's rule in x = q^b on plain coefficient vectors.
  std::vector<std::vector<Rational>> prev{{Rational(1)}};
  for (int m = 1; m <= n; ++m) {
    std::vector<std::vector<Rational>> cur(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      std::vector<Rational> poly;
      auto add_into = [&poly](const std::vector<Rational>& src, int shift) {
        if (poly.size() < src.size() + static_cast<std::size_t>(shift)) poly.resize(src.size() + static_cast<std::size_t>(shift));
        for (std::size_t i = 0; i < src.size(); ++i) poly[i + static_cast<std::size_t>(shift)] += src[i];
      };
      if (k >= 1) add_into(prev[static_cast<std::size_t>(k - 1)], 0);
      if (k <= m - 1) add_into(prev[static_cast<std::size_t>(k)], k);
      cur[static_cast<std::size_t>(k)] = std::move(poly);
    }
    prev = std::move(cur);
  }
  QTSLaurent out;
  const auto& poly = prev[static_cast<std::size_t>(r)];
  for (std::size_t i = 0; i < poly.size(); ++i) out.add(static_cast<int>(i) * b, 0, 0, poly[i]);
  return out;
}

QTSLaurent sigma_elem(const std::vector<int>& exps, int r) {
  if (r < 0 || r > static_cast<int>(exps.size())) return QTSLaurent();
  // e[k] = elementary symmetric polynomial of degree k in the processed q^{exps}.
  std::vector<QTSLaurent> e(static_cast<std::size_t>(r) + 1);
  e[0] = QTSLaurent(Rational(1));
  for (int x : exps) {
    for (int k = r; k >= 1; --k) e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)].times_monomial(Rational(1), x);
  }
  return e[static_cast<std::size_t>(r)];
}

namespace {

// Normalised factor: t^tshift (u q^ju + c q^jc t^tc s^sc), or a pure scalar.
struct Factor {
  Rational u;
  int ju = 0;
  Rational c;
  int jc = 0;
  int tc = 0;
  int sc = 0;
  int tshift = 0;
  bool scalar = false;
};

// 1 - z with z = c q^j t^k s^l.
std::optional<Factor> normalise(const QMono& z) {
  if (z.c.is_zero()) return std::nullopt;
  Factor f;
  if (z.q > 0) {
    f.u = Rational(1);
    f.ju = 0;
    f.c = -z.c;
    f.jc = z.q;
    f.tc = z.t;
    f.sc = z.s;
    return f;
  }
  if (z.q < 0) {
    if (z.s != 0 || z.t > 0) throw InvalidArgument("Pochhammer factor in a denominator has no unit term");
    // 1 - c q^j t^k = t^k (t^{-k} - c q^j) for k <= 0.
    f.u = -z.c;
    f.ju = z.q;
    f.c = Rational(1);
    f.jc = 0;
    f.tc = -z.t;
    f.tshift = z.t;
    return f;
  }
  if (z.t != 0 || z.s != 0 || z.c == Rational(1)) throw DivisionByZero();
  f.scalar = true;
  f.u = Rational(1) - z.c;
  return f;
}

}  // namespace

QTSLaurent poch_quotient(const std::vector<PochSpec>& num, const std::vector<PochSpec>& den, const QMono& extra, long cap) {
  QTSLaurent top = extra.series();
  for (const auto& p : num) top = top * qpochhammer(p.z, p.base, p.count);
  std::vector<Factor> factors;
  Rational scalar(1);
  int tshift = 0;
  for (const auto& p : den) {
    for (int i = 0; i < p.count; ++i) {
      auto f = normalise({p.z.c, p.z.q + i * p.base, p.z.t, p.z.s});
      if (!f) continue;
      if (f->scalar) {
        scalar *= f->u;
        continue;
      }
      tshift += f->tshift;
      factors.push_back(*f);
    }
  }
  if (top.is_zero()) return QTSLaurent().truncate(cap);
  top = top.times_monomial(scalar.inverse(), 0, -tshift, 0);
  // Each division by a factor with unit exponent ju lowers the known range
  // by ju, so earlier steps aim at cap plus the later exponents.
  std::vector<long> suffix(factors.size() + 1, 0);
  for (std::size_t i = factors.size(); i-- > 0;) suffix[i] = suffix[i + 1] + factors[i].ju;
  QTSLaurent acc = top;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Factor& f = factors[i];
    acc = acc.divide_binomial(f.u, f.ju, f.c, f.jc, f.tc, f.sc, cap + suffix[i + 1]);
  }
  return acc.truncate(cap);
}

QTSLaurent phi_eval(const std::vector<QMono>& upper, const std::vector<QMono>& lower, int base, const QMono& z, long cap) {
  if (base == 0) throw InvalidArgument("phi_eval needs a nonzero base");
  std::optional<int> terminate_at;
  for (const auto& a : upper) {
    if (a.c == Rational(1) && a.t == 0 && a.s == 0 && a.q % base == 0 && a.q / base <= 0) {
      const int n = -a.q / base;
      if (!terminate_at || n < *terminate_at) terminate_at = n;
    }
  }
  QTSLaurent sum = QTSLaurent().truncate(cap);
  if (z.c.is_zero()) return sum + QTSLaurent(Rational(1));
  const int r_limit = terminate_at ? *terminate_at : 100000;
  int quiet = 0;
  for (int r = 0; r <= r_limit; ++r) {
    std::vector<PochSpec> num;
    std::vector<PochSpec> den;
    for (const auto& a : upper) num.push_back({a, base, r});
    den.push_back({QMono{Rational(1), base, 0, 0}, base, r});
    for (const auto& b : lower) den.push_back({b, base, r});
    QTSLaurent term = poch_quotient(num, den, z.pow(r), cap);
    if (!terminate_at) {
      // Stop once several consecutive terms fall entirely beyond the cap.
      quiet = term.is_zero() ? quiet + 1 : 0;
      if (quiet >= 3) break;
      if (r == r_limit) throw CapExceeded("phi_eval did not leave the cap window");
    }
    sum += term;
  }
  return sum;
}

}  // namespace reflectia
