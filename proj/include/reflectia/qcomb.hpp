#pragma once

// q-Pochhammer symbols, q-binomials, elementary symmetric specializations and
// truncated basic hypergeometric sums.

#include <vector>

#include "reflectia/qseries.hpp"

namespace reflectia {

// c q^q t^t s^s. A zero coefficient stands for the parameter 0.
struct QMono {
  Rational c;
  int q = 0;
  int t = 0;
  int s = 0;

  QMono times(const QMono& o) const { return {c * o.c, q + o.q, t + o.t, s + o.s}; }
  QMono pow(int k) const { return {c.pow(k), q * k, t * k, s * k}; }
  QMono inverse() const { return {c.inverse(), -q, -t, -s}; }
  QTSLaurent series() const { return QTSLaurent::monomial(c, q, t, s); }
};

// prod_{i=0}^{k-1} (1 - z q^{ib}); b may be negative.
QTSLaurent qpochhammer(const QMono& z, int b, int k);
// [m]_{q^b} = 1 + q^b + ... + q^{b(m-1)}.
QTSLaurent qinteger(int m, int b);
// [n choose r]_{q^b}; zero unless 0 <= r <= n.
QTSLaurent qbinomial(int n, int r, int b);
// Sum over r-subsets S of exps of q^{sum(S)}.
QTSLaurent sigma_elem(const std::vector<int>& exps, int r);

// (z; q^base)_count.
struct PochSpec {
  QMono z;
  int base = 1;
  int count = 0;
};

// extra * prod(num Pochhammers) / prod(den Pochhammers), expanded to cap.
// Denominator factors are normalised so that each has a rational unit as its
// lowest q term; factors carrying t^{-k} with a negative q exponent are
// multiplied through by t^k first. Throws when a factor cannot be inverted.
QTSLaurent poch_quotient(const std::vector<PochSpec>& num, const std::vector<PochSpec>& den, const QMono& extra, long cap);

// sum_r z^r prod_i (a_i; Q)_r / ((Q; Q)_r prod_j (b_j; Q)_r), Q = q^base,
// truncated at cap. Terminates early when an upper parameter is Q^{-N}.
QTSLaurent phi_eval(const std::vector<QMono>& upper, const std::vector<QMono>& lower, int base, const QMono& z, long cap);

}  // namespace reflectia
