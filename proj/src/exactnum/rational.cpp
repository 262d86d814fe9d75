#include "reflectia/rational.hpp"

#include <cctype>
#include <ostream>

#include "reflectia/error.hpp"

namespace reflectia {

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  return out.set_str(buf, 10) == 0;
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(sgn(z)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class n;
  mpz_class d = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, n)) throw ParseError("bad rational: " + std::string(text));
  } else {
    if (!parse_integer(text.substr(0, slash), n) || !parse_integer(text.substr(slash + 1), d)) {
      throw ParseError("bad rational: " + std::string(text));
    }
    if (d == 0) throw DivisionByZero();
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) throw InvalidArgument("rational does not fit a long: " + str());
  return v_.get_num().get_si();
}

std::string Rational::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::size_t Rational::hash() const { return hash_mpz(v_.get_num()) * 31 + hash_mpz(v_.get_den()); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(z);
}

Rational factorial(long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

}  // namespace reflectia
