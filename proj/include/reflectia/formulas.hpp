#pragma once

// Closed forms for the s^r slices of the triply graded Molien series:
// the coincidental product formula, its f/h-vector analogues and their
// specializations, hook-content formulas for S_n, G(d,1,n) and G(de,e,n),
// and the Gutkin-Opdam count.

#include <optional>
#include <string>
#include <vector>

#include "reflectia/groups.hpp"
#include "reflectia/qseries.hpp"

namespace reflectia {

// r-th slice q^{r+a C(r,2)} [n r]_{q^a} (-t q^{e1}; q^a)_{n-r} (-t q^{-1}; q^{-a})_r
// / (q^{e1+1}; q^a)_n. Throws NotCoincidental unless the profile is
// coincidental (rank 1 always is). Cross-checked internally against the
// sigma_r form.
RationalForm main_theorem(const NumerologyProfile& p, int r);

// sigma_r(q^{e*}) prod_{i<=r} (1 + q^{-e*_i} t) prod_{i<=n-r} (1 + q^{e_i} t)
// / prod (1 - q^{d_i}) with the profile's own sorted lists. Equal to
// main_theorem on coincidental profiles; defined for every profile so that
// it can be compared against brute force elsewhere.
RationalForm theorem_one_shape(const NumerologyProfile& p, int r);

enum class FH { f, h };
// f_r is main_theorem(r); h_r = (-t q^{-ar-1})^{n-r} [n r]_{q^a}
// (-t q^{-1}; q^{-a})_r / (q^{e1+1}; q^a)_r.
RationalForm fh_qt(const NumerologyProfile& p, int r, FH which);

// sum_r s^r f_r - sum_r (-s q; q^a)_r h_r, expanded to cap.
QTSLaurent h_to_f_check(const NumerologyProfile& p, long cap);

// sum_r s^r f_r - (-t q^{e1}; q^a)_n / (q^{e1+1}; q^a)_n
//   2phi1[q^{-an}, -q t^{-1}; -q^{a(1-n)-e1} t^{-1} | q^a; -s q^{a-e1}].
QTSLaurent twophi1_residual(const NumerologyProfile& p, long cap);
// The same 2phi1 minus its Jackson transform
//   (c/b; Q)_n / (c; Q)_n 3phi2[Q^{-n}, b, b z Q^{-n} / c; b Q^{1-n} / c, 0 | Q, Q].
QTSLaurent jackson_residual(const NumerologyProfile& p, long cap);

enum class CatalanKind { catalan, narayana, kirkman };
// catalan: prod (1 - q^{p+e_i}) / (1 - q^{d_i}); narayana: h_r at t = -q^p;
// kirkman: f_r at t = -q^p. Requires p = 1 mod h unless unchecked; under
// that guarantee a non-polynomial or negative coefficient is a
// VerificationFailure.
QTSLaurent catalan_family(const NumerologyProfile& p, int pval, CatalanKind kind, std::optional<int> r = std::nullopt, bool unchecked = false);

struct ClusterCounts {
  long f = 0;
  long h = 0;
  long fomin_reading = 0;  // C(n,r) prod_{i<=n-r} (h + d_i) / d_i
};
// Kirkman and Narayana at p = h + 1, then q = 1. Needs a real coincidental
// profile (coexponents equal exponents).
ClusterCounts cluster_fh(const NumerologyProfile& p, int r);
// sum_r f_r s^r == sum_r h_r (1 + s)^r as integer polynomials in s.
bool cluster_h_to_f_holds(const NumerologyProfile& p);

using Partition = std::vector<int>;

std::vector<Partition> partitions(int n);
// n! / prod of hooklengths.
long standard_tableaux(const Partition& lambda);
// q^{n(lambda)} prod_x (1 + t q^{c(x)}) / (1 - q^{h(x)}).
RationalForm hook_content(const Partition& lambda);
// hook_content with q -> q^b and t -> t q^c.
RationalForm hook_content_substituted(const Partition& lambda, int b, int c);
// sum_lambda f^lambda P_lambda - (1 + t)^n / (1 - q)^n, expanded to cap.
QTSLaurent hook_orthogonality_residual(int n, long cap);

// Components lambda^(0), ..., lambda^(d-1).
RationalForm koike_wreath(const std::vector<Partition>& multi, int d);
// Smallest mu in 1..e with lambda^(i) = lambda^(i + d mu) for all i. The
// restriction of the G(de,1,n) character splits into e/mu constituents.
int koike_mu(const std::vector<Partition>& multi, int d, int e);
// G(de,e,n) with multi of length de: the sum over v < mu(multi), which is
// the series of one constituent.
RationalForm koike_deen(const std::vector<Partition>& multi, int d, int e);
// Closed forms for the wedge slices of G(de,e,n) by case: r = 0,
// 0 < r < n with d >= 2 or d = 1, and r = n.
RationalForm koike_deen_wedge(int d, int e, int n, int r);
// The product formula the main theorem would predict for G(de,e,n) at
// 0 < r < n, in the simplified shape displayed for d >= 2 and d = 1.
RationalForm deen_would_be(int d, int e, int n, int r);

// C(n-1,k-1) C(n-1,r) N + C(n-1,k) C(n-1,r-1) N*.
long gutkin_opdam(int n, int k, int r, int N, int Nstar);

}  // namespace reflectia
