#include "reflectia/formulas.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "reflectia/error.hpp"
#include "reflectia/qcomb.hpp"

namespace reflectia {

namespace {

QTSLaurent mono(const Rational& c, int q, int t = 0, int s = 0) { return QTSLaurent::monomial(c, q, t, s); }

// 1 + c q^j t^k.
QTSLaurent one_plus(const Rational& c, int j, int k) { return QTSLaurent(Rational(1)) + mono(c, j, k); }

// Exponents of (q^start; q^step)_count, for use as a denominator multiset.
std::vector<int> poch_den(int start, int step, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(start + step * i);
  return out;
}

void append(std::vector<int>& a, const std::vector<int>& b) { a.insert(a.end(), b.begin(), b.end()); }

int choose2(int r) { return r * (r - 1) / 2; }

int gap_of(const NumerologyProfile& p) {
  if (p.n == 1) return p.a.value_or(1);
  if (!p.coincidental || !p.a) {
    throw NotCoincidental("the product formula only holds for coincidental groups; this profile (degrees " +
                          nlohmann::json(p.degrees).dump() + ", coexponents " + nlohmann::json(p.coexponents).dump() + ") is not");
  }
  return *p.a;
}

void check_r(const NumerologyProfile& p, int r) {
  if (r < 0 || r > p.n) throw InvalidArgument("r must lie in 0.." + std::to_string(p.n));
}

}  // namespace

RationalForm theorem_one_shape(const NumerologyProfile& p, int r) {
  check_r(p, r);
  QTSLaurent num = sigma_elem(p.coexponents, r);
  for (int i = 0; i < r; ++i) num = num * one_plus(Rational(1), -p.coexponents[static_cast<std::size_t>(i)], 1);
  for (int i = 0; i < p.n - r; ++i) num = num * one_plus(Rational(1), p.exponents[static_cast<std::size_t>(i)], 1);
  return RationalForm(num, p.degrees);
}

RationalForm main_theorem(const NumerologyProfile& p, int r) {
  check_r(p, r);
  const int a = gap_of(p);
  const int n = p.n;
  const int e1 = p.e1;
  QTSLaurent num = mono(Rational(1), r + a * choose2(r)) * qbinomial(n, r, a) *
                   qpochhammer(QMono{Rational(-1), e1, 1, 0}, a, n - r) * qpochhammer(QMono{Rational(-1), -1, 1, 0}, -a, r);
  RationalForm out(num, poch_den(e1 + 1, a, n));
  if (!(out == theorem_one_shape(p, r))) throw VerificationFailure("product formula and sigma form disagree at r = " + std::to_string(r));
  return out;
}

RationalForm fh_qt(const NumerologyProfile& p, int r, FH which) {
  if (which == FH::f) return main_theorem(p, r);
  check_r(p, r);
  const int a = gap_of(p);
  const int n = p.n;
  const Rational sign = (n - r) % 2 == 0 ? Rational(1) : Rational(-1);
  QTSLaurent num = mono(sign, -(a * r + 1) * (n - r), n - r) * qbinomial(n, r, a) * qpochhammer(QMono{Rational(-1), -1, 1, 0}, -a, r);
  return RationalForm(num, poch_den(p.e1 + 1, a, r));
}

QTSLaurent h_to_f_check(const NumerologyProfile& p, long cap) {
  const int a = gap_of(p);
  QTSLaurent lhs = QTSLaurent().truncate(cap);
  QTSLaurent rhs = QTSLaurent().truncate(cap);
  for (int r = 0; r <= p.n; ++r) {
    lhs += main_theorem(p, r).expand(cap).times_monomial(Rational(1), 0, 0, r);
    rhs += qpochhammer(QMono{Rational(-1), 1, 0, 1}, a, r) * fh_qt(p, r, FH::h).expand(cap);
  }
  return (lhs - rhs).truncate(cap);
}

namespace {

struct PhiParams {
  int n = 0;
  int a = 1;
  QMono b;
  QMono c;
  QMono z;
};

PhiParams phi_params(const NumerologyProfile& p) {
  PhiParams x;
  x.n = p.n;
  x.a = gap_of(p);
  x.b = QMono{Rational(-1), 1, -1, 0};
  x.c = QMono{Rational(-1), x.a * (1 - p.n) - p.e1, -1, 0};
  x.z = QMono{Rational(-1), x.a - p.e1, 0, 1};
  return x;
}

QTSLaurent twophi1(const PhiParams& x, long cap) {
  return phi_eval({QMono{Rational(1), -x.a * x.n, 0, 0}, x.b}, {x.c}, x.a, x.z, cap);
}

// Re-runs f at growing internal caps until its result is known up to cap.
template <class F>
QTSLaurent to_cap(F&& f, long cap) {
  for (long inner = cap; inner <= 8 * cap + 64; inner += cap / 2 + 4) {
    QTSLaurent x = f(inner);
    if (!x.cap() || *x.cap() >= cap) return x.truncate(cap);
  }
  throw CapExceeded("series lost too much precision below the cap");
}

QTSLaurent twophi1_residual_raw(const NumerologyProfile& p, long cap) {
  const PhiParams x = phi_params(p);
  QTSLaurent lhs = QTSLaurent().truncate(cap);
  for (int r = 0; r <= p.n; ++r) lhs += main_theorem(p, r).expand(cap).times_monomial(Rational(1), 0, 0, r);
  const QTSLaurent pre = poch_quotient({PochSpec{QMono{Rational(-1), p.e1, 1, 0}, x.a, p.n}}, {PochSpec{QMono{Rational(1), p.e1 + 1, 0, 0}, x.a, p.n}},
                                       QMono{Rational(1), 0, 0, 0}, cap);
  return lhs - pre * twophi1(x, cap);
}

QTSLaurent jackson_residual_raw(const NumerologyProfile& p, long cap) {
  const PhiParams x = phi_params(p);
  const QMono Qn{Rational(1), -x.a * x.n, 0, 0};
  const QMono c_over_b = x.c.times(x.b.inverse());
  const QMono third = x.b.times(x.z).times(Qn).times(x.c.inverse());
  const QMono lower = x.b.times(QMono{Rational(1), x.a * (1 - x.n), 0, 0}).times(x.c.inverse());
  const QTSLaurent pre = poch_quotient({PochSpec{c_over_b, x.a, x.n}}, {PochSpec{x.c, x.a, x.n}}, QMono{Rational(1), 0, 0, 0}, cap);
  const QTSLaurent rhs = pre * phi_eval({Qn, x.b, third}, {lower, QMono{Rational(0), 0, 0, 0}}, x.a, QMono{Rational(1), x.a, 0, 0}, cap);
  return twophi1(x, cap) - rhs;
}

}  // namespace

QTSLaurent twophi1_residual(const NumerologyProfile& p, long cap) {
  return to_cap([&](long inner) { return twophi1_residual_raw(p, inner); }, cap);
}

QTSLaurent jackson_residual(const NumerologyProfile& p, long cap) {
  return to_cap([&](long inner) { return jackson_residual_raw(p, inner); }, cap);
}

// ------------------------------------------------------------ Catalan

QTSLaurent catalan_family(const NumerologyProfile& p, int pval, CatalanKind kind, std::optional<int> r, bool unchecked) {
  if (pval < 1) throw InvalidArgument("p must be positive");
  const bool guaranteed = p.h > 0 && (pval - 1) % p.h == 0;
  if (!guaranteed && !unchecked) {
    throw InvalidArgument("p = " + std::to_string(pval) + " is not 1 mod h = " + std::to_string(p.h) + "; pass the unchecked flag to evaluate anyway");
  }
  RationalForm form;
  if (kind == CatalanKind::catalan) {
    QTSLaurent num(Rational(1));
    for (int e : p.exponents) num = num - num.times_monomial(Rational(1), pval + e);
    form = RationalForm(num, p.degrees);
  } else {
    if (!r) throw InvalidArgument("narayana and kirkman numbers need r");
    form = fh_qt(p, *r, kind == CatalanKind::kirkman ? FH::f : FH::h).substitute_t(pval);
  }
  auto poly = form.as_polynomial();
  if (!poly) {
    if (guaranteed) throw VerificationFailure("specialization at p = " + std::to_string(pval) + " is not a polynomial");
    throw InvalidArgument("specialization at p = " + std::to_string(pval) + " is not a polynomial");
  }
  if (guaranteed && (poly->has_negative_exponents() || !poly->nonnegative_integer_coefficients())) {
    throw VerificationFailure("specialization at p = " + std::to_string(pval) + " has a negative or fractional coefficient");
  }
  return *poly;
}

namespace {

void require_real(const NumerologyProfile& p) {
  if (p.coexponents != p.exponents) throw InvalidArgument("cluster f/h vectors need a real profile (coexponents equal to exponents)");
}

long at_one(const QTSLaurent& x) {
  const Rational v = x.at_q_one().constant();
  if (!v.is_integer()) throw VerificationFailure("q = 1 value is not an integer");
  return v.to_long();
}

}  // namespace

ClusterCounts cluster_fh(const NumerologyProfile& p, int r) {
  require_real(p);
  check_r(p, r);
  ClusterCounts out;
  out.f = at_one(catalan_family(p, p.h + 1, CatalanKind::kirkman, r));
  out.h = at_one(catalan_family(p, p.h + 1, CatalanKind::narayana, r));
  Rational fr = binomial(p.n, r);
  for (int i = 0; i < p.n - r; ++i) {
    const int d = p.degrees[static_cast<std::size_t>(i)];
    fr *= Rational(p.h + d, d);
  }
  if (!fr.is_integer()) throw VerificationFailure("Fomin-Reading product is not an integer");
  out.fomin_reading = fr.to_long();
  return out;
}

bool cluster_h_to_f_holds(const NumerologyProfile& p) {
  std::vector<Rational> lhs(static_cast<std::size_t>(p.n) + 1);
  std::vector<Rational> rhs(static_cast<std::size_t>(p.n) + 1);
  for (int r = 0; r <= p.n; ++r) {
    const ClusterCounts c = cluster_fh(p, r);
    lhs[static_cast<std::size_t>(r)] += Rational(c.f);
    for (int k = 0; k <= r; ++k) rhs[static_cast<std::size_t>(k)] += binomial(r, k) * Rational(c.h);
  }
  return lhs == rhs;
}

// ------------------------------------------------------- hook content

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  // Reverse lexicographic generation: largest part first.
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

struct Cell {
  int content;
  int hook;
};

std::vector<Cell> cells(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0 || (i > 0 && lambda[i] > lambda[i - 1])) throw InvalidArgument("not a partition");
  }
  std::vector<Cell> out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++below;
      out.push_back({j - static_cast<int>(i), lambda[i] - j - 1 + below + 1});
    }
  }
  return out;
}

int n_of(const Partition& lambda) {
  int s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += static_cast<int>(i) * lambda[i];
  return s;
}

int size_of(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

}  // namespace

long standard_tableaux(const Partition& lambda) {
  Rational v = factorial(size_of(lambda));
  for (const Cell& c : cells(lambda)) v /= Rational(c.hook);
  return v.to_long();
}

RationalForm hook_content_substituted(const Partition& lambda, int b, int c) {
  QTSLaurent num = mono(Rational(1), b * n_of(lambda));
  std::vector<int> den;
  for (const Cell& x : cells(lambda)) {
    num = num * one_plus(Rational(1), c + b * x.content, 1);
    den.push_back(b * x.hook);
  }
  return RationalForm(num, den);
}

RationalForm hook_content(const Partition& lambda) { return hook_content_substituted(lambda, 1, 0); }

QTSLaurent hook_orthogonality_residual(int n, long cap) {
  QTSLaurent sum = QTSLaurent().truncate(cap);
  for (const Partition& lambda : partitions(n)) sum += hook_content(lambda).expand(cap) * Rational(standard_tableaux(lambda));
  QTSLaurent num(Rational(1));
  for (int i = 0; i < n; ++i) num = num * one_plus(Rational(1), 0, 1);
  return (sum - RationalForm(num, std::vector<int>(static_cast<std::size_t>(n), 1)).expand(cap)).truncate(cap);
}

// -------------------------------------------------------------- Koike

RationalForm koike_wreath(const std::vector<Partition>& multi, int d) {
  if (d < 1 || static_cast<int>(multi.size()) != d) throw InvalidArgument("a d-multipartition needs exactly d components");
  RationalForm out = hook_content_substituted(multi[0], d, d - 1);
  for (int i = 1; i < d; ++i) {
    const Partition& lam = multi[static_cast<std::size_t>(i)];
    out = out * RationalForm(mono(Rational(1), size_of(lam) * (d - i))) * hook_content_substituted(lam, d, -1);
  }
  return out;
}

int koike_mu(const std::vector<Partition>& multi, int d, int e) {
  const int de = d * e;
  if (d < 1 || e < 1 || static_cast<int>(multi.size()) != de) throw InvalidArgument("G(de,e,n) needs a de-multipartition");
  auto comp = [&](int i) -> const Partition& { return multi[static_cast<std::size_t>(((i % de) + de) % de)]; };
  for (int mu = 1; mu < e; ++mu) {
    bool periodic = true;
    for (int i = 0; i < de; ++i) periodic = periodic && comp(i) == comp(i + d * mu);
    if (periodic) return mu;
  }
  return e;
}

RationalForm koike_deen(const std::vector<Partition>& multi, int d, int e) {
  const int de = d * e;
  if (d < 1 || e < 1 || static_cast<int>(multi.size()) != de) throw InvalidArgument("G(de,e,n) needs a de-multipartition");
  auto comp = [&](int i) -> const Partition& { return multi[static_cast<std::size_t>(((i % de) + de) % de)]; };
  const int mu = koike_mu(multi, d, e);
  RationalForm out(QTSLaurent{});
  for (int v = 0; v < mu; ++v) {
    RationalForm term = hook_content_substituted(comp(d * v), de, de - 1);
    for (int i = 1; i < de; ++i) {
      const Partition& lam = comp(d * v + i);
      term = term * RationalForm(mono(Rational(1), size_of(lam) * (de - i))) * hook_content_substituted(lam, de, -1);
    }
    out = out + term;
  }
  return out;
}

RationalForm koike_deen_wedge(int d, int e, int n, int r) {
  if (d < 1 || e < 1 || n < 2 || d * e < 2) throw InvalidArgument("koike_deen_wedge needs d, e >= 1 and n, de >= 2");
  if (r < 0 || r > n) throw InvalidArgument("r must lie in 0..n");
  const int de = d * e;
  auto poch_t = [&](int qshift, int step, int count) { return qpochhammer(QMono{Rational(-1), qshift, 1, 0}, step, count); };
  if (r == 0) {
    QTSLaurent num = poch_t(de - 1, de, n - 1) * one_plus(Rational(1), d * n - 1, 1);
    std::vector<int> den = poch_den(de, de, n - 1);
    den.push_back(d * n);
    return RationalForm(num, den);
  }
  if (r == n) {
    QTSLaurent tail = d >= 2 ? mono(Rational(1), de * (n - 1) + 1) + mono(Rational(1), 0, 1) : mono(Rational(1), (n - 1) * (e - 1)) + mono(Rational(1), 0, 1);
    QTSLaurent num = mono(Rational(1), de * choose2(n - 1) + n - 1) * poch_t(-1, -de, n - 1) * tail;
    std::vector<int> den = poch_den(de, de, n - 1);
    den.push_back(d * n);
    return RationalForm(num, den);
  }
  std::vector<int> den = poch_den(de, de, r);
  append(den, poch_den(de, de, n - r));
  den.push_back(d * n);
  if (d >= 2) {
    // 1 - q^{den} + t q^{-1} (q^{de(n-r)} (1 - q^{dn}) + q^{dn} - q^{den})
    QTSLaurent bracket = QTSLaurent(Rational(1)) - mono(Rational(1), de * n);
    QTSLaurent inner = mono(Rational(1), de * (n - r)) * (QTSLaurent(Rational(1)) - mono(Rational(1), d * n)) + mono(Rational(1), d * n) - mono(Rational(1), de * n);
    bracket += inner * mono(Rational(1), -1, 1);
    QTSLaurent num = mono(Rational(1), de * choose2(r) + r) * poch_t(-1, -de, r) * poch_t(de - 1, de, n - 1 - r) * bracket;
    return RationalForm(num, den);
  }
  // d = 1: three-line numerator.
  const QTSLaurent one_minus_qn = QTSLaurent(Rational(1)) - mono(Rational(1), n);
  const QTSLaurent q_plus_t = mono(Rational(1), 1) + mono(Rational(1), 0, 1);
  const QTSLaurent line1 = mono(Rational(1), r) * one_plus(Rational(1), (n - r) * e - 1, 1) * one_plus(Rational(1), -(r - 1) * e - 1, 1) * one_minus_qn;
  const QTSLaurent line2 = mono(Rational(1), (n - r) * (e - 1) - 1) * one_plus(Rational(1), e - 1, 1) * one_minus_qn * q_plus_t;
  const QTSLaurent line3 = mono(Rational(1), r - 1) * one_plus(Rational(1), -(r - 1) * e - 1, 1) * q_plus_t * (mono(Rational(1), n) - mono(Rational(1), n * (e - 1)));
  QTSLaurent num = mono(Rational(1), e * choose2(r)) * poch_t(-1, -e, r - 1) * poch_t(e - 1, e, n - 1 - r) * (line1 + line2 + line3);
  return RationalForm(num, den);
}

RationalForm deen_would_be(int d, int e, int n, int r) {
  if (d < 1 || e < 1 || n < 2 || d * e < 2) throw InvalidArgument("deen_would_be needs d, e >= 1 and n, de >= 2");
  if (r < 1 || r > n - 1) throw InvalidArgument("deen_would_be is displayed for 0 < r < n only");
  const int de = d * e;
  auto poch_t = [&](int qshift, int step, int count) { return qpochhammer(QMono{Rational(-1), qshift, 1, 0}, step, count); };
  if (d >= 2) {
    QTSLaurent num = mono(Rational(1), de * choose2(r) + r) * poch_t(-1, -de, r) * poch_t(de - 1, de, n - 1 - r) *
                     one_plus(Rational(1), d * std::min((n - r) * e, n) - 1, 1);
    std::vector<int> den = poch_den(de, de, r);
    append(den, poch_den(de, de, n - r));
    return RationalForm(num, den);
  }
  QTSLaurent num = mono(Rational(1), e * choose2(r) + r) * poch_t(-1, -e, r - 1) * poch_t(e - 1, e, n - 1 - r) *
                   one_plus(Rational(1), std::min((n - r) * e, n) - 1, 1) * one_plus(Rational(1), -std::min(1 + (r - 1) * e, (n - 1) * (e - 1)), 1);
  num = num * (QTSLaurent(Rational(1)) - mono(Rational(1), n * e - r * e) + mono(Rational(1), n * e - r * e - n) - mono(Rational(1), n * e - n));
  std::vector<int> den = poch_den(e, e, r - 1);
  append(den, poch_den(e, e, n - r));
  den.push_back(r * e);
  den.push_back(n);
  return RationalForm(num, den);
}

long gutkin_opdam(int n, int k, int r, int N, int Nstar) {
  const Rational v = binomial(n - 1, k - 1) * binomial(n - 1, r) * Rational(N) + binomial(n - 1, k) * binomial(n - 1, r - 1) * Rational(Nstar);
  return v.to_long();
}

}  // namespace reflectia
