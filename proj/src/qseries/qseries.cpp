#include "reflectia/qseries.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "reflectia/error.hpp"

namespace reflectia {

// ---------------------------------------------------------------- TSPoly

TSPoly TSPoly::monomial(const Rational& c, int t, int s) {
  TSPoly p;
  p.add(t, s, c);
  return p;
}

void TSPoly::add(int t, int s, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({t, s}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool TSPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0}); }

Rational TSPoly::constant() const { return coeff(0, 0); }

Rational TSPoly::coeff(int t, int s) const {
  auto it = terms_.find({t, s});
  return it == terms_.end() ? Rational(0) : it->second;
}

int TSPoly::max_t() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) m = std::max(m, k.first);
  return m;
}

int TSPoly::min_t() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) m = std::min(m, k.first);
  return m;
}

int TSPoly::max_s() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) m = std::max(m, k.second);
  return m;
}

TSPoly& TSPoly::operator+=(const TSPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TSPoly& TSPoly::operator-=(const TSPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TSPoly& TSPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

TSPoly operator*(const TSPoly& a, const TSPoly& b) {
  TSPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

TSPoly TSPoly::operator-() const {
  TSPoly out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

TSPoly TSPoly::shifted(int dt, int ds) const {
  TSPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first + dt, k.second + ds}, c);
  return out;
}

Rational TSPoly::evaluate(const Rational& tv, const Rational& sv) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) acc += c * tv.pow(k.first) * sv.pow(k.second);
  return acc;
}

// ------------------------------------------------------------ QTSLaurent

namespace {

constexpr long kNoCap = std::numeric_limits<long>::max() / 4;

long cap_or_inf(const QTSLaurent& x) { return x.cap() ? *x.cap() : kNoCap; }

long lowest_or_inf(const QTSLaurent& x) { return x.is_zero() ? kNoCap : x.lowest_q(); }

std::optional<long> finite_cap(long c) {
  if (c >= kNoCap / 2) return std::nullopt;
  return c;
}

}  // namespace

QTSLaurent QTSLaurent::monomial(const Rational& c, int q, int t, int s) {
  QTSLaurent out;
  out.add(q, t, s, c);
  return out;
}

QTSLaurent QTSLaurent::from_slice(const std::map<int, Rational>& coeffs, int t, int s) {
  QTSLaurent out;
  for (const auto& [q, c] : coeffs) out.add(q, t, s, c);
  return out;
}

void QTSLaurent::add(int q, const TSPoly& c) {
  if (c.is_zero()) return;
  if (cap_ && q > *cap_) return;
  auto [it, inserted] = terms_.try_emplace(q, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QTSLaurent::add(int q, int t, int s, const Rational& c) {
  if (c.is_zero()) return;
  add(q, TSPoly::monomial(c, t, s));
}

QTSLaurent QTSLaurent::truncate(long cap) const {
  QTSLaurent out;
  out.cap_ = cap_ ? std::min(*cap_, cap) : cap;
  for (const auto& [q, c] : terms_) {
    if (q > *out.cap_) break;
    out.terms_.emplace(q, c);
  }
  return out;
}

QTSLaurent QTSLaurent::exact() const {
  QTSLaurent out = *this;
  out.cap_.reset();
  return out;
}

int QTSLaurent::lowest_q() const {
  if (terms_.empty()) throw InvalidArgument("lowest_q of the zero series");
  return terms_.begin()->first;
}

int QTSLaurent::highest_q() const {
  if (terms_.empty()) throw InvalidArgument("highest_q of the zero series");
  return terms_.rbegin()->first;
}

TSPoly QTSLaurent::coeff(int q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? TSPoly() : it->second;
}

Rational QTSLaurent::coeff(int q, int t, int s) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? Rational(0) : it->second.coeff(t, s);
}

std::map<int, Rational> QTSLaurent::slice(int t, int s) const {
  std::map<int, Rational> out;
  for (const auto& [q, c] : terms_) {
    Rational v = c.coeff(t, s);
    if (!v.is_zero()) out.emplace(q, v);
  }
  return out;
}

QTSLaurent QTSLaurent::s_slice(int s) const {
  QTSLaurent out;
  out.cap_ = cap_;
  for (const auto& [q, c] : terms_) {
    for (const auto& [k, v] : c.terms()) {
      if (k.second == s) out.add(q, k.first, 0, v);
    }
  }
  return out;
}

int QTSLaurent::max_t() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [q, c] : terms_) m = std::max(m, c.max_t());
  return m;
}

int QTSLaurent::min_t() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [q, c] : terms_) m = std::min(m, c.min_t());
  return m;
}

int QTSLaurent::max_s() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [q, c] : terms_) m = std::max(m, c.max_s());
  return m;
}

bool QTSLaurent::has_negative_exponents() const {
  for (const auto& [q, c] : terms_) {
    if (q < 0) return true;
    for (const auto& [k, v] : c.terms()) {
      if (k.first < 0 || k.second < 0) return true;
    }
  }
  return false;
}

bool QTSLaurent::nonnegative_integer_coefficients() const {
  for (const auto& [q, c] : terms_) {
    for (const auto& [k, v] : c.terms()) {
      if (!v.is_integer() || v.sign() < 0) return false;
    }
  }
  return true;
}

QTSLaurent& QTSLaurent::operator+=(const QTSLaurent& o) {
  if (o.cap_ && (!cap_ || *o.cap_ < *cap_)) *this = truncate(*o.cap_);
  for (const auto& [q, c] : o.terms_) add(q, c);
  return *this;
}

QTSLaurent& QTSLaurent::operator-=(const QTSLaurent& o) {
  if (o.cap_ && (!cap_ || *o.cap_ < *cap_)) *this = truncate(*o.cap_);
  for (const auto& [q, c] : o.terms_) add(q, -c);
  return *this;
}

QTSLaurent& QTSLaurent::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [q, v] : terms_) v *= c;
  return *this;
}

QTSLaurent operator*(const QTSLaurent& a, const QTSLaurent& b) {
  const long cap = std::min(cap_or_inf(a) + lowest_or_inf(b), cap_or_inf(b) + lowest_or_inf(a));
  QTSLaurent out;
  out.cap_ = finite_cap(std::min(cap, kNoCap));
  for (const auto& [qa, ca] : a.terms_) {
    for (const auto& [qb, cb] : b.terms_) {
      const int q = qa + qb;
      if (out.cap_ && q > *out.cap_) break;
      out.add(q, ca * cb);
    }
  }
  return out;
}

QTSLaurent QTSLaurent::operator-() const {
  QTSLaurent out = *this;
  for (auto& [q, v] : out.terms_) v = -v;
  return out;
}

QTSLaurent QTSLaurent::times_monomial(const Rational& c, int dq, int dt, int ds) const {
  QTSLaurent out;
  if (cap_) out.cap_ = *cap_ + dq;
  if (c.is_zero()) return out;
  for (const auto& [q, v] : terms_) out.terms_.emplace(q + dq, v.shifted(dt, ds) * c);
  return out;
}

QTSLaurent QTSLaurent::invert_unit(long cap) const {
  if (terms_.empty()) throw DivisionByZero();
  const int j = lowest_q();
  const TSPoly& lead = terms_.begin()->second;
  if (!lead.is_constant()) throw InvalidArgument("invert_unit: lowest q term is not a rational constant");
  const Rational inv = lead.constant().inverse();
  long out_cap = cap;
  if (cap_) out_cap = std::min(out_cap, *cap_ - 2L * j);
  QTSLaurent out;
  out.cap_ = out_cap;
  const long K = out_cap + j;  // highest index of g needed
  std::vector<TSPoly> g;
  for (long k = 0; k <= K; ++k) {
    TSPoly acc;
    if (k == 0) {
      acc = TSPoly(inv);
    } else {
      for (const auto& [q, c] : terms_) {
        const long i = q - j;
        if (i == 0) continue;
        if (i > k) break;
        acc -= c * g[static_cast<std::size_t>(k - i)];
      }
      acc *= inv;
    }
    g.push_back(acc);
    out.add(static_cast<int>(k - j), acc);
  }
  return out;
}

QTSLaurent QTSLaurent::divide_binomial(const Rational& u, int ju, const Rational& c, int jc, int tc, int sc, long target) const {
  if (u.is_zero()) throw DivisionByZero();
  if (jc <= ju) throw InvalidArgument("divide_binomial: unit term must have the lowest q exponent");
  long out_cap = target;
  if (cap_) out_cap = std::min(out_cap, *cap_ - ju);
  QTSLaurent out;
  out.cap_ = out_cap;
  if (terms_.empty()) return out;
  const Rational uinv = u.inverse();
  const int gap = jc - ju;
  const TSPoly x = TSPoly::monomial(c, tc, sc);
  std::map<int, TSPoly> b;
  for (long e = static_cast<long>(lowest_q()) - ju; e <= out_cap; ++e) {
    TSPoly acc = coeff(static_cast<int>(e + ju));
    auto prev = b.find(static_cast<int>(e - gap));
    if (prev != b.end()) acc -= x * prev->second;
    if (acc.is_zero()) continue;
    acc *= uinv;
    b.emplace(static_cast<int>(e), acc);
  }
  for (auto& [q, v] : b) out.terms_.emplace(q, std::move(v));
  return out;
}

std::optional<QTSLaurent> QTSLaurent::exact_divide_one_minus(int d) const {
  if (d <= 0) throw InvalidArgument("exact_divide_one_minus needs d > 0");
  if (cap_) throw InvalidArgument("exact division needs an exact Laurent polynomial");
  if (terms_.empty()) return QTSLaurent();
  const int lo = lowest_q();
  const int hi = highest_q();
  if (hi - lo < d) return std::nullopt;
  std::map<int, TSPoly> quot;
  for (int e = lo; e <= hi - d; ++e) {
    TSPoly acc = coeff(e);
    auto prev = quot.find(e - d);
    if (prev != quot.end()) acc += prev->second;
    if (!acc.is_zero()) quot.emplace(e, acc);
  }
  // Remainder check: the top d coefficients must come out right.
  for (int e = hi - d + 1; e <= hi; ++e) {
    TSPoly expect = coeff(e);
    auto prev = quot.find(e - d);
    TSPoly got = prev == quot.end() ? TSPoly() : -prev->second;
    if (expect != got) return std::nullopt;
  }
  QTSLaurent out;
  for (auto& [q, v] : quot) out.terms_.emplace(q, std::move(v));
  return out;
}

QTSLaurent QTSLaurent::substitute_t(int p) const {
  if (cap_ && (p < 0 || (!terms_.empty() && min_t() < 0))) {
    throw InvalidArgument("substitute_t on a capped series needs p >= 0 and t exponents >= 0");
  }
  QTSLaurent out;
  out.cap_ = cap_;
  for (const auto& [q, c] : terms_) {
    for (const auto& [k, v] : c.terms()) {
      const Rational sign = (k.first % 2 == 0) ? Rational(1) : Rational(-1);
      out.add(q + p * k.first, 0, k.second, v * sign);
    }
  }
  return out;
}

TSPoly QTSLaurent::at_q_one() const {
  if (cap_) throw InvalidArgument("at_q_one needs an exact Laurent polynomial");
  TSPoly out;
  for (const auto& [q, c] : terms_) out += c;
  return out;
}

bool operator==(const QTSLaurent& a, const QTSLaurent& b) {
  const long cap = std::min(cap_or_inf(a), cap_or_inf(b));
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (true) {
    const bool ea = ia == a.terms_.end() || ia->first > cap;
    const bool eb = ib == b.terms_.end() || ib->first > cap;
    if (ea || eb) return ea && eb;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

nlohmann::json QTSLaurent::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [q, c] : terms_) {
    for (const auto& [k, v] : c.terms()) {
      arr.push_back({{"q", q}, {"t", k.first}, {"s", k.second}, {"coeff", v.str()}});
    }
  }
  return arr;
}

QTSLaurent QTSLaurent::from_json(const nlohmann::json& j) {
  QTSLaurent out;
  for (const auto& rec : j) out.add(rec.at("q").get<int>(), rec.at("t").get<int>(), rec.at("s").get<int>(), Rational::parse(rec.at("coeff").get<std::string>()));
  return out;
}

std::string QTSLaurent::str() const {
  std::ostringstream os;
  bool first = true;
  auto var = [](std::ostringstream& o, bool& any, const char* name, int e) {
    if (e == 0) return;
    o << (any ? "*" : "") << name;
    if (e != 1) o << "^" << e;
    any = true;
  };
  for (const auto& [q, c] : terms_) {
    for (const auto& [k, v] : c.terms()) {
      const bool neg = v.value() < 0;
      const Rational mag = neg ? -v : v;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::ostringstream mono;
      bool any = false;
      var(mono, any, "q", q);
      var(mono, any, "t", k.first);
      var(mono, any, "s", k.second);
      const bool unit = mag == Rational(1);
      if (!unit || !any) os << (mag.den() == 1 ? mag.num().get_str() : mag.str());
      if (any) os << (unit ? "" : "*") << mono.str();
    }
  }
  if (first) os << "0";
  if (cap_) os << " + O(q^" << (*cap_ + 1) << ")";
  return os.str();
}

// ---------------------------------------------------------- RationalForm

QTSLaurent one_minus_product(const std::vector<int>& ds) {
  QTSLaurent out(Rational(1));
  for (int d : ds) out = out - out.times_monomial(Rational(1), d);
  return out;
}

RationalForm::RationalForm(QTSLaurent num, std::vector<int> den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.truncated()) throw InvalidArgument("RationalForm numerator must be exact");
  for (int d : den_) {
    if (d <= 0) throw InvalidArgument("denominator factors (1 - q^d) need d > 0");
  }
  std::sort(den_.begin(), den_.end());
}

QTSLaurent RationalForm::expand(long cap) const {
  QTSLaurent acc = num_.truncate(cap);
  for (int d : den_) acc = acc.divide_one_minus(d, cap);
  return acc;
}

RationalForm RationalForm::substitute_t(int p) const { return RationalForm(num_.substitute_t(p), den_); }

std::optional<QTSLaurent> RationalForm::as_polynomial() const {
  QTSLaurent acc = num_;
  for (int d : den_) {
    auto next = acc.exact_divide_one_minus(d);
    if (!next) return std::nullopt;
    acc = std::move(*next);
  }
  return acc;
}

QTSLaurent RationalForm::numerator_over(const std::vector<int>& den) const {
  std::vector<int> mine = den_;
  std::vector<int> target = den;
  std::sort(target.begin(), target.end());
  std::vector<int> extra;
  std::size_t i = 0;
  for (int d : target) {
    if (i < mine.size() && mine[i] == d) {
      ++i;
    } else {
      extra.push_back(d);
    }
  }
  if (i != mine.size()) throw InvalidArgument("numerator_over: target denominator does not contain this one");
  return num_ * one_minus_product(extra);
}

RationalForm operator*(const RationalForm& a, const RationalForm& b) {
  std::vector<int> den = a.den_;
  den.insert(den.end(), b.den_.begin(), b.den_.end());
  return RationalForm(a.num_ * b.num_, std::move(den));
}

namespace {

std::vector<int> multiset_union(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RationalForm operator+(const RationalForm& a, const RationalForm& b) {
  std::vector<int> den = multiset_union(a.den_, b.den_);
  return RationalForm(a.numerator_over(den) + b.numerator_over(den), den);
}

bool operator==(const RationalForm& a, const RationalForm& b) {
  std::vector<int> den = multiset_union(a.den_, b.den_);
  return a.numerator_over(den) == b.numerator_over(den);
}

}  // namespace reflectia
