#pragma once

// Laurent polynomials and truncated series in q whose coefficients are
// polynomials in t and s, plus rational forms num / prod(1 - q^d).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "reflectia/rational.hpp"

namespace reflectia {

// Polynomial in t and s with rational coefficients. Exponents are signed so
// that intermediate factors such as t^{-1} can be carried; produced Hilbert
// series only ever have nonnegative exponents.
class TSPoly {
 public:
  using Key = std::pair<int, int>;  // (t exponent, s exponent)

  TSPoly() = default;
  TSPoly(const Rational& c) { add(0, 0, c); }  // NOLINT: constants embed
  static TSPoly monomial(const Rational& c, int t, int s);

  void add(int t, int s, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (t^0 s^0).
  Rational constant() const;
  Rational coeff(int t, int s) const;
  const std::map<Key, Rational>& terms() const { return terms_; }
  int max_t() const;
  int max_s() const;
  int min_t() const;

  TSPoly& operator+=(const TSPoly& o);
  TSPoly& operator-=(const TSPoly& o);
  TSPoly& operator*=(const Rational& c);
  friend TSPoly operator+(TSPoly a, const TSPoly& b) { return a += b; }
  friend TSPoly operator-(TSPoly a, const TSPoly& b) { return a -= b; }
  friend TSPoly operator*(const TSPoly& a, const TSPoly& b);
  friend TSPoly operator*(TSPoly a, const Rational& c) { return a *= c; }
  TSPoly operator-() const;
  // Multiplies by t^dt s^ds.
  TSPoly shifted(int dt, int ds) const;
  // Value at t = tv, s = sv (both rational, t^{-k} requires tv != 0).
  Rational evaluate(const Rational& tv, const Rational& sv) const;

  friend bool operator==(const TSPoly& a, const TSPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TSPoly& a, const TSPoly& b) { return !(a == b); }

 private:
  std::map<Key, Rational> terms_;
};

class QTSLaurent {
 public:
  QTSLaurent() = default;
  QTSLaurent(const Rational& c) { add(0, TSPoly(c)); }  // NOLINT: constants embed
  static QTSLaurent monomial(const Rational& c, int q, int t = 0, int s = 0);
  static QTSLaurent from_slice(const std::map<int, Rational>& coeffs, int t = 0, int s = 0);

  void add(int q, const TSPoly& c);
  void add(int q, int t, int s, const Rational& c);

  const std::map<int, TSPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Cap D: the series is known exactly for q exponents <= D only.
  const std::optional<long>& cap() const { return cap_; }
  bool truncated() const { return cap_.has_value(); }
  QTSLaurent truncate(long cap) const;
  // Drops the cap marker; only meaningful when the value is known exact.
  QTSLaurent exact() const;

  // Lowest and highest q exponents present; throw on the zero series.
  int lowest_q() const;
  int highest_q() const;
  TSPoly coeff(int q) const;
  Rational coeff(int q, int t, int s) const;
  // The univariate q-series multiplying t^t s^s.
  std::map<int, Rational> slice(int t, int s) const;
  // Collects all terms with the given s exponent, keeping q and t.
  QTSLaurent s_slice(int s) const;
  int max_t() const;
  int max_s() const;
  int min_t() const;
  bool has_negative_exponents() const;
  bool nonnegative_integer_coefficients() const;

  QTSLaurent& operator+=(const QTSLaurent& o);
  QTSLaurent& operator-=(const QTSLaurent& o);
  QTSLaurent& operator*=(const Rational& c);
  friend QTSLaurent operator+(QTSLaurent a, const QTSLaurent& b) { return a += b; }
  friend QTSLaurent operator-(QTSLaurent a, const QTSLaurent& b) { return a -= b; }
  friend QTSLaurent operator*(const QTSLaurent& a, const QTSLaurent& b);
  friend QTSLaurent operator*(QTSLaurent a, const Rational& c) { return a *= c; }
  QTSLaurent operator-() const;
  // Multiplies by c q^dq t^dt s^ds.
  QTSLaurent times_monomial(const Rational& c, int dq, int dt = 0, int ds = 0) const;

  // Inverse of a series whose lowest q term is a nonzero rational constant
  // times q^j, truncated at cap.
  QTSLaurent invert_unit(long cap) const;
  // Division by a two-term factor u q^ju + c q^jc t^tc s^sc with jc > ju and
  // u a nonzero rational, producing a result known up to target (further
  // limited by this series' own cap).
  QTSLaurent divide_binomial(const Rational& u, int ju, const Rational& c, int jc, int tc, int sc, long target) const;
  // Division by (1 - q^d), d > 0.
  QTSLaurent divide_one_minus(int d, long target) const { return divide_binomial(Rational(1), 0, Rational(-1), d, 0, 0, target); }
  // Exact division by (1 - q^d) when the quotient is a Laurent polynomial.
  std::optional<QTSLaurent> exact_divide_one_minus(int d) const;

  // t^k -> (-1)^k q^{pk}.
  QTSLaurent substitute_t(int p) const;
  // Value at q = 1; requires an exact (uncapped) Laurent polynomial.
  TSPoly at_q_one() const;

  // Equality up to the smaller of the two caps.
  friend bool operator==(const QTSLaurent& a, const QTSLaurent& b);
  friend bool operator!=(const QTSLaurent& a, const QTSLaurent& b) { return !(a == b); }

  nlohmann::json to_json() const;
  static QTSLaurent from_json(const nlohmann::json& j);
  std::string str() const;

 private:
  std::map<int, TSPoly> terms_;
  std::optional<long> cap_;
};

// num / prod_{d in den} (1 - q^d).
class RationalForm {
 public:
  RationalForm() = default;
  RationalForm(QTSLaurent num, std::vector<int> den = {});

  const QTSLaurent& num() const { return num_; }
  const std::vector<int>& den() const { return den_; }

  QTSLaurent expand(long cap) const;
  RationalForm substitute_t(int p) const;
  // The numerator after cancelling every denominator factor exactly, or
  // nullopt when the form is not a Laurent polynomial.
  std::optional<QTSLaurent> as_polynomial() const;
  // Numerator rescaled to the given denominator multiset, which must contain
  // this form's denominator.
  QTSLaurent numerator_over(const std::vector<int>& den) const;

  friend RationalForm operator*(const RationalForm& a, const RationalForm& b);
  friend RationalForm operator+(const RationalForm& a, const RationalForm& b);
  // Exact equality as rational functions (cross multiplication).
  friend bool operator==(const RationalForm& a, const RationalForm& b);

 private:
  QTSLaurent num_;
  std::vector<int> den_;
};

// prod_{d} (1 - q^d) as an exact polynomial.
QTSLaurent one_minus_product(const std::vector<int>& ds);

}  // namespace reflectia
