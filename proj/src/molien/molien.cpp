#include "reflectia/molien.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "reflectia/error.hpp"

namespace reflectia {

namespace {

// From det(x I - w) = sum_k cp_k x^k: det(1 - x w) has cp_{n-j} at x^j and
// det(1 + x w) has (-1)^j cp_{n-j}.
std::vector<Cyclotomic> reversed_with_sign(const std::vector<Cyclotomic>& cp, bool alternate) {
  const int n = static_cast<int>(cp.size()) - 1;
  std::vector<Cyclotomic> out;
  out.reserve(cp.size());
  for (int j = 0; j <= n; ++j) {
    Cyclotomic v = cp[static_cast<std::size_t>(n - j)].simplified();
    if (alternate && j % 2 == 1) v = -v;
    out.push_back(std::move(v));
  }
  return out;
}

using Accumulator = std::vector<Cyclotomic>;

std::size_t acc_index(long k, int j, int l, int n) {
  return (static_cast<std::size_t>(k) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(j)) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(l);
}

void add_contribution(const CycMatrix& w, std::uint64_t count, long cap, Accumulator& acc) {
  const int n = w.n();
  const CharTriple ct = char_data(w);
  // 1 / det(1 - q w) to the cap.
  std::vector<Cyclotomic> g(static_cast<std::size_t>(cap) + 1);
  g[0] = Cyclotomic(Rational(1));
  for (long k = 1; k <= cap; ++k) {
    Cyclotomic s;
    for (int j = 1; j <= std::min<long>(k, n); ++j) {
      const Cyclotomic& a = ct.one_minus_q[static_cast<std::size_t>(j)];
      if (a.is_zero()) continue;
      s -= a * g[static_cast<std::size_t>(k - j)];
    }
    g[static_cast<std::size_t>(k)] = s;
  }
  std::vector<Cyclotomic> ts(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (int j = 0; j <= n; ++j) {
    for (int l = 0; l <= n; ++l) ts[static_cast<std::size_t>(j * (n + 1) + l)] = ct.one_plus_t[static_cast<std::size_t>(j)] * ct.one_plus_s_inv[static_cast<std::size_t>(l)];
  }
  const Cyclotomic c(Rational(static_cast<long>(count)));
  for (long k = 0; k <= cap; ++k) {
    if (g[static_cast<std::size_t>(k)].is_zero()) continue;
    const Cyclotomic gk = g[static_cast<std::size_t>(k)] * c;
    for (int j = 0; j <= n; ++j) {
      for (int l = 0; l <= n; ++l) {
        const Cyclotomic& x = ts[static_cast<std::size_t>(j * (n + 1) + l)];
        if (x.is_zero()) continue;
        acc[acc_index(k, j, l, n)] += gk * x;
      }
    }
  }
}

QTSLaurent finish(const Accumulator& acc, int n, std::uint64_t order, long cap) {
  QTSLaurent out = QTSLaurent().truncate(cap);
  const Rational inv = Rational(static_cast<long>(order)).inverse();
  for (long k = 0; k <= cap; ++k) {
    for (int j = 0; j <= n; ++j) {
      for (int l = 0; l <= n; ++l) {
        const Cyclotomic& v = acc[acc_index(k, j, l, n)];
        if (!v.is_rational()) throw VerificationFailure("Molien coefficient is not rational at q^" + std::to_string(k) + " t^" + std::to_string(j) + " s^" + std::to_string(l));
        const Rational x = v.rational_value() * inv;
        if (!x.is_integer() || x.sign() < 0) throw VerificationFailure("Molien coefficient is not a nonnegative integer: " + x.str());
        out.add(static_cast<int>(k), j, l, x);
      }
    }
  }
  return out;
}

std::vector<int> multiset_from_poly(const std::map<int, Rational>& poly, const char* what) {
  std::vector<int> out;
  for (const auto& [e, c] : poly) {
    if (!c.is_integer() || c.sign() < 0) throw VerificationFailure(std::string(what) + " polynomial has a coefficient that is not a nonnegative integer");
    for (long i = 0; i < c.to_long(); ++i) out.push_back(e);
  }
  return out;
}

std::map<int, Rational> times_one_minus(const std::map<int, Rational>& a, const std::vector<int>& ds, long cap) {
  std::map<int, Rational> cur = a;
  for (int d : ds) {
    std::map<int, Rational> next = cur;
    for (const auto& [e, c] : cur) {
      if (e + d > cap) continue;
      next[e + d] -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

CharTriple char_data(const CycMatrix& w) {
  const auto cp = w.charpoly();
  const auto cpi = w.inverse().charpoly();
  CharTriple out;
  out.one_minus_q = reversed_with_sign(cp, false);
  out.one_plus_t = reversed_with_sign(cp, true);
  out.one_plus_s_inv = reversed_with_sign(cpi, true);
  return out;
}

QTSLaurent brute_hilbert(const std::vector<EigenBucket>& buckets, std::uint64_t order, long cap, ExecMode mode) {
  if (cap < 0) throw InvalidArgument("brute_hilbert needs a nonnegative cap");
  if (buckets.empty()) throw InvalidArgument("brute_hilbert needs at least one bucket");
  const int n = buckets.front().representative.n();
  const std::size_t size = acc_index(cap + 1, 0, 0, n);
  int threads = 1;
#ifdef _OPENMP
  if (mode == ExecMode::parallel) threads = omp_get_max_threads();
#endif
  std::vector<Accumulator> partial(static_cast<std::size_t>(threads), Accumulator(size));
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(buckets.size()); ++b) {
      int tid = 0;
#ifdef _OPENMP
      tid = omp_get_thread_num();
#endif
      const auto& bk = buckets[static_cast<std::size_t>(b)];
      add_contribution(bk.representative, bk.count, cap, partial[static_cast<std::size_t>(tid)]);
    }
  } else {
    for (const auto& bk : buckets) add_contribution(bk.representative, bk.count, cap, partial[0]);
  }
  // Exact addition, so the reduction order does not matter.
  Accumulator& acc = partial[0];
  for (std::size_t t = 1; t < partial.size(); ++t) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!partial[t][i].is_zero()) acc[i] += partial[t][i];
    }
  }
  return finish(acc, n, order, cap);
}

QTSLaurent brute_hilbert_elementwise(const GroupElements& elems, long cap) {
  const int n = elems.n();
  Accumulator acc(acc_index(cap + 1, 0, 0, n));
  for (std::size_t i = 0; i < elems.size(); ++i) add_contribution(elems.element(i), 1, cap, acc);
  return finish(acc, n, elems.size(), cap);
}

NumerologyProfile recover_numerology(const QTSLaurent& series, int n) {
  if (!series.cap()) throw InvalidArgument("recover_numerology needs a capped series");
  const long cap = *series.cap();
  const auto h0 = series.slice(0, 0);
  std::vector<int> degrees;
  for (int found = 0; found < n; ++found) {
    const auto r = times_one_minus(h0, degrees, cap);
    int next = -1;
    for (const auto& [e, c] : r) {
      if (e == 0) continue;
      if (c.sign() < 0) throw VerificationFailure("invariant slice is not a product of 1/(1 - q^d)");
      next = e;
      break;
    }
    if (next < 0) throw CapExceeded("cap " + std::to_string(cap) + " too small to recover " + std::to_string(n) + " degrees");
    degrees.push_back(next);
  }
  const auto rest = times_one_minus(h0, degrees, cap);
  if (rest.size() != 1 || rest.begin()->first != 0 || rest.begin()->second != Rational(1)) {
    throw VerificationFailure("invariant slice is not 1/prod(1 - q^d) for the recovered degrees");
  }
  const auto ex_poly = times_one_minus(series.slice(1, 0), degrees, cap);
  const auto co_poly = times_one_minus(series.slice(0, 1), degrees, cap);
  std::vector<int> exps = multiset_from_poly(ex_poly, "exponent");
  std::vector<int> coexps = multiset_from_poly(co_poly, "coexponent");
  if (static_cast<int>(exps.size()) < n || static_cast<int>(coexps.size()) < n) throw CapExceeded("cap " + std::to_string(cap) + " too small to see all exponents");
  if (static_cast<int>(exps.size()) > n || static_cast<int>(coexps.size()) > n) throw VerificationFailure("too many exponents in the t-linear slice");
  for (int i = 0; i < n; ++i) {
    if (exps[static_cast<std::size_t>(i)] != degrees[static_cast<std::size_t>(i)] - 1) throw VerificationFailure("exponents disagree with degrees - 1");
  }
  if (cap < 2 * degrees.back()) throw CapExceeded("cap must be at least twice the largest degree");
  return NumerologyProfile::from(degrees, coexps);
}

long default_cap(const NumerologyProfile& p) { return p.N + p.Nstar + p.h + 1; }

QTSLaurent nu_extract(const QTSLaurent& series, const NumerologyProfile& profile, int r) {
  if (!series.cap()) throw InvalidArgument("nu_extract needs a capped series");
  const long cap = *series.cap();
  const long top = profile.N + profile.Nstar;
  if (cap <= top) throw CapExceeded("cap " + std::to_string(cap) + " must exceed N + N* = " + std::to_string(top));
  const QTSLaurent nu = series.s_slice(r) * one_minus_product(profile.degrees);
  for (const auto& [q, c] : nu.terms()) {
    if (q > top && q <= cap) throw CapExceeded("nu_" + std::to_string(r) + " has support in the guard band; cap too small or bad profile");
  }
  return nu.truncate(top).exact();
}

long psi_from_nu(const QTSLaurent& nu, int k) {
  Rational acc(0);
  for (const auto& [q, c] : nu.slice(k, 0)) acc += c * Rational(q);
  return acc.to_long();
}

std::uint64_t count_reflections(const std::vector<EigenBucket>& buckets) {
  std::uint64_t total = 0;
  for (const auto& b : buckets) {
    if (is_reflection(b.representative)) total += b.count;
  }
  return total;
}

MolienResult analyse(const Enumeration& e, int n, std::optional<long> min_cap, ExecMode mode) {
  MolienResult res;
  res.order = e.elements.size();
  res.reflections = count_reflections(e.buckets);
  long cap = 16;
  NumerologyProfile p;
  while (true) {
    try {
      p = recover_numerology(brute_hilbert(e.buckets, res.order, cap, mode), n);
      break;
    } catch (const CapExceeded&) {
      if (cap > 4096) throw;
      cap *= 2;
    }
  }
  if (p.order() != res.order) throw VerificationFailure("product of recovered degrees differs from |W|");
  if (static_cast<std::uint64_t>(p.N) != res.reflections) throw VerificationFailure("sum of recovered exponents differs from the number of reflections");
  res.cap = std::max(default_cap(p), min_cap.value_or(0));
  res.series = brute_hilbert(e.buckets, res.order, res.cap, mode);
  res.profile = recover_numerology(res.series, n);
  for (int r = 0; r <= n; ++r) res.nu.push_back(nu_extract(res.series, res.profile, r));
  return res;
}

std::vector<CheckOutcome> slice_checks(const MolienResult& res, const NumerologyProfile& p) {
  std::vector<CheckOutcome> out;
  const long cap = res.cap;
  const auto& s = res.series;
  const std::vector<int>& ds = p.degrees;

  // Invariant ring: 1 / prod(1 - q^d).
  const QTSLaurent inv = RationalForm(QTSLaurent(Rational(1)), ds).expand(cap);
  out.push_back({"invariants", QTSLaurent::from_slice(s.slice(0, 0)).truncate(cap) == inv});

  QTSLaurent exps_sum;
  for (int e : p.exponents) exps_sum.add(e, 0, 0, Rational(1));
  out.push_back({"t-linear", QTSLaurent::from_slice(s.slice(1, 0)).truncate(cap) == RationalForm(exps_sum, ds).expand(cap)});

  QTSLaurent solomon(Rational(1));
  for (int e : p.exponents) solomon = solomon + solomon.times_monomial(Rational(1), e, 1, 0);
  out.push_back({"s=0 slice", s.s_slice(0) == RationalForm(solomon, ds).expand(cap)});

  QTSLaurent t0;
  for (const auto& [q, c] : s.terms()) {
    for (const auto& [k, v] : c.terms()) {
      if (k.first == 0) t0.add(q, 0, k.second, v);
    }
  }
  QTSLaurent os(Rational(1));
  for (int e : p.coexponents) os = os + os.times_monomial(Rational(1), e, 0, 1);
  out.push_back({"t=0 slice", t0.truncate(cap) == RationalForm(os, ds).expand(cap)});

  const int n = p.n;
  QTSLaurent top(Rational(1));
  for (int e : p.coexponents) top = top.times_monomial(Rational(1), e) + top.times_monomial(Rational(1), 0, 1);
  out.push_back({"s^n product", res.nu.at(static_cast<std::size_t>(n)) == top});
  out.push_back({"nu_0 product", res.nu.at(0) == solomon});

  if (p.duality && n >= 1) {
    QTSLaurent coexps_sum;
    for (int e : p.coexponents) coexps_sum.add(e, 0, 0, Rational(1));
    QTSLaurent nu1 = coexps_sum * (QTSLaurent(Rational(1)) + QTSLaurent::monomial(Rational(1), -1, 1));
    for (int i = 0; i + 1 < n; ++i) nu1 = nu1 + nu1.times_monomial(Rational(1), p.exponents[static_cast<std::size_t>(i)], 1, 0);
    out.push_back({"duality nu_1", res.nu.at(1) == nu1});
  }
  if (p.irreducible) {
    // Steinberg: the exterior powers are irreducible and pairwise distinct,
    // so the q^0 part is sum_k (ts)^k.
    TSPoly expect;
    for (int k = 0; k <= n; ++k) expect.add(k, k, Rational(1));
    out.push_back({"q^0 coefficient", s.coeff(0) == expect});
  } else {
    out.push_back({"q^0 coefficient", s.coeff(0, 0, 0) == Rational(1)});
  }
  return out;
}

}  // namespace reflectia
