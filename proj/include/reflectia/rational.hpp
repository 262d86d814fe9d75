#pragma once

// Exact rational numbers. Thin value type over GMP's mpq_class that keeps
// the canonical form invariant (reduced, positive denominator) and gives the
// "num/den" text form used by every serializer in the library.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace reflectia {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT: integers convert implicitly
  Rational(int v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "a", "-a", "a/b". Throws ParseError on anything else and
  // DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  // Requires is_integer() and a value that fits in a long.
  long to_long() const;
  double to_double() const { return v_.get_d(); }

  // Canonical "num/den" string; the denominator is always written.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational inverse() const;
  Rational pow(long e) const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  std::size_t hash() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Binomial coefficient as an exact integer; zero outside 0 <= k <= n.
Rational binomial(long n, long k);
Rational factorial(long n);

}  // namespace reflectia

template <>
struct std::hash<reflectia::Rational> {
  std::size_t operator()(const reflectia::Rational& r) const { return r.hash(); }
};
