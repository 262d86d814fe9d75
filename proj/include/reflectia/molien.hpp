#pragma once

// Brute force triply graded Molien series
//   (1/|W|) sum_w det(1 + t w) det(1 + s w^{-1}) / det(1 - q w)
// and the numerator polynomials nu_r extracted from it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reflectia/enumerate.hpp"
#include "reflectia/qseries.hpp"

namespace reflectia {

// Coefficient lists, lowest degree first, each with constant term 1.
struct CharTriple {
  std::vector<Cyclotomic> one_minus_q;      // det(1 - q w)
  std::vector<Cyclotomic> one_plus_t;       // det(1 + t w)
  std::vector<Cyclotomic> one_plus_s_inv;   // det(1 + s w^{-1})
};

CharTriple char_data(const CycMatrix& w);

// Sum over buckets (parallel over buckets in parallel mode), divided by the
// order. Throws VerificationFailure when a coefficient is not a nonnegative
// integer.
QTSLaurent brute_hilbert(const std::vector<EigenBucket>& buckets, std::uint64_t order, long cap, ExecMode mode = ExecMode::parallel);
// Serial reference: one term per element, no bucketing.
QTSLaurent brute_hilbert_elementwise(const GroupElements& elems, long cap);

// Degrees from the (t,s) = (0,0) slice, exponents from t^1 s^0, coexponents
// from t^0 s^1. Throws CapExceeded when the cap is too small to see n
// degrees, VerificationFailure when the slices are inconsistent.
NumerologyProfile recover_numerology(const QTSLaurent& series, int n);

// s^r slice times prod(1 - q^{d_i}), checked to vanish in the guard band
// above N + N*. Returns an exact polynomial in q and t.
QTSLaurent nu_extract(const QTSLaurent& series, const NumerologyProfile& profile, int r);

// sum_j j c_j where the t^k slice of nu is sum_j c_j q^j.
long psi_from_nu(const QTSLaurent& nu, int k);

// Default cap N + N* + max d + 1.
long default_cap(const NumerologyProfile& p);

std::uint64_t count_reflections(const std::vector<EigenBucket>& buckets);

struct MolienResult {
  QTSLaurent series;
  NumerologyProfile profile;  // recovered from the series
  std::vector<QTSLaurent> nu;  // r = 0..n
  long cap = 0;
  std::uint64_t order = 0;
  std::uint64_t reflections = 0;
};

// Low cap pass to recover the numerology, then the full pass at the
// default cap (or at least min_cap). Validates prod d_i = |W| and
// sum e_i = number of reflections.
MolienResult analyse(const Enumeration& e, int n, std::optional<long> min_cap = std::nullopt, ExecMode mode = ExecMode::parallel);

// Universal identities for the slices of a Molien series.
struct CheckOutcome {
  std::string name;
  bool ok = false;
};
std::vector<CheckOutcome> slice_checks(const MolienResult& res, const NumerologyProfile& expected);

}  // namespace reflectia
