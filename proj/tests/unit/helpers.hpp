#pragma once

#include <initializer_list>
#include <tuple>

#include "reflectia/qseries.hpp"

namespace testing {

// Sum of c q^a t^b s^d over (a, b, d, c).
inline reflectia::QTSLaurent series(std::initializer_list<std::tuple<int, int, int, long>> terms) {
  reflectia::QTSLaurent out;
  for (const auto& [q, t, s, c] : terms) out.add(q, t, s, reflectia::Rational(c));
  return out;
}

// Polynomial in q alone from coefficients, lowest degree first.
inline reflectia::QTSLaurent qlist(std::initializer_list<long> coeffs, int shift = 0) {
  reflectia::QTSLaurent out;
  int k = shift;
  for (long c : coeffs) out.add(k++, 0, 0, reflectia::Rational(c));
  return out;
}

}  // namespace testing
