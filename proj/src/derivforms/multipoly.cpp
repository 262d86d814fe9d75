#include <bit>
#include <functional>
#include <sstream>

#include "reflectia/derivforms.hpp"
#include "reflectia/error.hpp"

namespace reflectia {

// ------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(int nvars, const Cyclotomic& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e, Cyclotomic(1));
}

MultiPoly MultiPoly::monomial(const Exponent& alpha, const Cyclotomic& c) {
  MultiPoly p(static_cast<int>(alpha.size()));
  p.add_term(alpha, c);
  return p;
}

Cyclotomic MultiPoly::coeff(const Exponent& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void MultiPoly::add_term(const Exponent& alpha, const Cyclotomic& c) {
  if (static_cast<int>(alpha.size()) != n_) throw InvalidArgument("exponent length does not match the number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [a, c] : terms_) {
    int s = 0;
    for (int x : a) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  for (const auto& [a, c] : terms_) {
    int s = 0;
    for (int x : a) s += x;
    if (s != d) return false;
  }
  return true;
}

MultiPoly MultiPoly::partial(int i) const {
  MultiPoly out(n_);
  for (const auto& [a, c] : terms_) {
    const int k = a[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    Exponent b = a;
    b[static_cast<std::size_t>(i)] = k - 1;
    out.add_term(b, Cyclotomic(static_cast<long>(k)) * c);
  }
  return out;
}

MultiPoly MultiPoly::conj() const {
  MultiPoly out(n_);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, c.conj());
  return out;
}

MultiPoly MultiPoly::apply_as_operator(const MultiPoly& f) const {
  MultiPoly out(n_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : f.terms_) {
      // d^a x^b = prod b_i! / (b_i - a_i)! x^{b-a}.
      Exponent e(b.size());
      Rational factor(1);
      bool zero = false;
      for (std::size_t i = 0; i < b.size() && !zero; ++i) {
        if (b[i] < a[i]) {
          zero = true;
          break;
        }
        e[i] = b[i] - a[i];
        for (int k = b[i]; k > e[i]; --k) factor *= Rational(k);
      }
      if (!zero) out.add_term(e, Cyclotomic(factor) * c * d);
    }
  }
  return out;
}

MultiPoly MultiPoly::substitute_linear(const CycMatrix& a) const {
  std::vector<MultiPoly> images;
  for (int i = 0; i < n_; ++i) {
    MultiPoly li(n_);
    for (int k = 0; k < n_; ++k) {
      Exponent e(static_cast<std::size_t>(n_), 0);
      e[static_cast<std::size_t>(k)] = 1;
      li.add_term(e, a.at(i, k));
    }
    images.push_back(std::move(li));
  }
  // Powers of each image, built on demand.
  std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(n_));
  auto power = [&](int i, int k) -> const MultiPoly& {
    auto& p = powers[static_cast<std::size_t>(i)];
    if (p.empty()) p.push_back(constant(n_, Cyclotomic(1)));
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * images[static_cast<std::size_t>(i)]);
    return p[static_cast<std::size_t>(k)];
  };
  MultiPoly out(n_);
  for (const auto& [alpha, c] : terms_) {
    MultiPoly term = constant(n_, c);
    for (int i = 0; i < n_; ++i) {
      if (alpha[static_cast<std::size_t>(i)] > 0) term = term * power(i, alpha[static_cast<std::size_t>(i)]);
    }
    out += term;
  }
  return out;
}

bool MultiPoly::proportional(const MultiPoly& other, Cyclotomic* c) const {
  if (other.is_zero()) return false;
  const auto& [a0, c0] = *other.terms_.begin();
  const Cyclotomic ratio = coeff(a0) / c0;
  if (!(*this == ratio * other)) return false;
  if (c != nullptr) *c = ratio;
  return true;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out(a.n_);
  for (const auto& [x, c] : a.terms_) {
    for (const auto& [y, d] : b.terms_) {
      Exponent e(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) e[i] = x[i] + y[i];
      out.add_term(e, c * d);
    }
  }
  return out;
}

MultiPoly operator*(const Cyclotomic& c, const MultiPoly& a) {
  MultiPoly out(a.n_);
  if (c.is_zero()) return out;
  for (const auto& [x, d] : a.terms_) out.add_term(x, c * d);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [x, c] : a.terms_) {
    if (x != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 1) os << "*x" << i + 1;
      if (it->first[i] > 1) os << "*x" << i + 1 << "^" << it->first[i];
    }
  }
  return os.str();
}

namespace {

// FNV-1a over a canonical string.
std::string fnv_digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace

std::string MultiPoly::digest() const { return fnv_digest(str()); }

// ------------------------------------------------------------- MixedForm

MixedForm MixedForm::from(const MultiPoly& f, std::uint32_t K, std::uint32_t R) {
  MixedForm out(f.nvars());
  for (const auto& [a, c] : f.terms()) out.add_term(a, K, R, c);
  return out;
}

void MixedForm::add_term(const Exponent& alpha, std::uint32_t K, std::uint32_t R, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{alpha, K, R}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MixedForm::component(std::uint32_t K, std::uint32_t R) const {
  MultiPoly out(n_);
  for (const auto& [k, c] : terms_) {
    if (std::get<1>(k) == K && std::get<2>(k) == R) out.add_term(std::get<0>(k), c);
  }
  return out;
}

MixedForm& MixedForm::operator+=(const MixedForm& o) {
  for (const auto& [k, c] : o.terms_) add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
  return *this;
}

MixedForm operator*(const Cyclotomic& c, const MixedForm& a) {
  MixedForm out(a.n_);
  for (const auto& [k, d] : a.terms_) out.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c * d);
  return out;
}

bool operator==(const MixedForm& a, const MixedForm& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [k, c] : a.terms_) {
    if (k != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string MixedForm::str() const {
  if (terms_.empty()) return "0";
  std::map<std::pair<std::uint32_t, std::uint32_t>, MultiPoly> parts;
  for (const auto& [k, c] : terms_) {
    auto [it, ins] = parts.try_emplace({std::get<1>(k), std::get<2>(k)}, MultiPoly(n_));
    it->second.add_term(std::get<0>(k), c);
  }
  auto wedge_name = [&](std::uint32_t mask, char v) {
    if (mask == 0) return std::string("1");
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (mask & (1u << i)) {
        if (!s.empty()) s += "^";
        s += v + std::to_string(i + 1);
      }
    }
    return s;
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [kr, f] : parts) {
    if (!first) os << " + ";
    first = false;
    os << "[" << f.str() << "] (x) " << wedge_name(kr.first, 'x') << " (x) " << wedge_name(kr.second, 'y');
  }
  return os.str();
}

std::string MixedForm::digest() const { return fnv_digest(str()); }

// ----------------------------------------------------------- derivations

namespace {

// x_j ^ x_K = sign * x_{K + j}, sign 0 when j is in K.
int wedge_sign(int j, std::uint32_t K) {
  if (K & (1u << j)) return 0;
  const int below = std::popcount(K & ((1u << j) - 1u));
  return below % 2 == 0 ? 1 : -1;
}

// Sign of the shuffle that sorts the concatenation A then B (disjoint).
int concat_sign(std::uint32_t A, std::uint32_t B) {
  int inversions = 0;
  for (int i = 0; i < 32; ++i) {
    if (B & (1u << i)) inversions += std::popcount(A & ~((2u << i) - 1u));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Derivation euler_derivation(int n) {
  Derivation th;
  for (int i = 0; i < n; ++i) th.push_back(MultiPoly::variable(n, i));
  return th;
}

MixedForm as_form(const Derivation& theta) {
  const int n = static_cast<int>(theta.size());
  MixedForm out(n);
  for (int j = 0; j < n; ++j) out += MixedForm::from(theta[static_cast<std::size_t>(j)], 0, 1u << j);
  return out;
}

MixedForm wedge(const std::vector<Derivation>& thetas) {
  if (thetas.empty()) throw InvalidArgument("wedge of no derivations");
  const int n = static_cast<int>(thetas.front().size());
  MixedForm acc = as_form(thetas.front());
  for (std::size_t t = 1; t < thetas.size(); ++t) {
    MixedForm next(n);
    for (const auto& [k, c] : acc.terms()) {
      const std::uint32_t R = std::get<2>(k);
      for (int j = 0; j < n; ++j) {
        if (R & (1u << j)) continue;
        const int sign = concat_sign(R, 1u << j);
        const MultiPoly prod = MultiPoly::monomial(std::get<0>(k), c) * thetas[t][static_cast<std::size_t>(j)];
        for (const auto& [a, d] : prod.terms()) next.add_term(a, 0, R | (1u << j), Cyclotomic(static_cast<long>(sign)) * d);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

MixedForm apply_theta_tilde(const Derivation& theta, const MixedForm& omega) {
  const int n = omega.nvars();
  if (static_cast<int>(theta.size()) != n) throw InvalidArgument("derivation and form have different ranks");
  std::vector<MultiPoly> ops;
  for (const auto& h : theta) ops.push_back(h.conj());
  MixedForm out(n);
  for (const auto& [k, c] : omega.terms()) {
    const MultiPoly f = MultiPoly::monomial(std::get<0>(k), c);
    const std::uint32_t K = std::get<1>(k);
    for (int j = 0; j < n; ++j) {
      const int sign = wedge_sign(j, K);
      if (sign == 0) continue;
      const MultiPoly g = ops[static_cast<std::size_t>(j)].apply_as_operator(f);
      for (const auto& [a, d] : g.terms()) out.add_term(a, K | (1u << j), std::get<2>(k), Cyclotomic(static_cast<long>(sign)) * d);
    }
  }
  return out;
}

MixedForm contract_euler(const MixedForm& omega) {
  const int n = omega.nvars();
  MixedForm out(n);
  for (const auto& [k, c] : omega.terms()) {
    const std::uint32_t K = std::get<1>(k);
    if (std::popcount(K) != 1) throw InvalidArgument("contract_euler needs a form of degree 1 in wedge V*");
    const int j = std::countr_zero(K);
    Exponent a = std::get<0>(k);
    a[static_cast<std::size_t>(j)] += 1;
    out.add_term(a, 0, std::get<2>(k), c);
  }
  return out;
}

// ------------------------------------------------------------ group action

namespace {

// Image of the basis wedge e_K under the linear map with columns
// images[k] (coefficients of e_k's image in the basis).
std::vector<std::pair<std::uint32_t, Cyclotomic>> wedge_image(const CycMatrix& cols, std::uint32_t K) {
  const int n = cols.n();
  std::vector<int> ks;
  for (int i = 0; i < n; ++i) {
    if (K & (1u << i)) ks.push_back(i);
  }
  std::vector<std::pair<std::uint32_t, Cyclotomic>> out;
  if (ks.empty()) {
    out.emplace_back(0u, Cyclotomic(1));
    return out;
  }
  const int m = static_cast<int>(ks.size());
  for (std::uint32_t L = 0; L < (1u << n); ++L) {
    if (std::popcount(L) != m) continue;
    std::vector<int> ls;
    for (int i = 0; i < n; ++i) {
      if (L & (1u << i)) ls.push_back(i);
    }
    CycMatrix minor(m, cols.m());
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) minor.set(r, c, cols.at(ls[static_cast<std::size_t>(r)], ks[static_cast<std::size_t>(c)]));
    }
    Cyclotomic d = minor.det();
    if (!d.is_zero()) out.emplace_back(L, d);
  }
  return out;
}

}  // namespace

MultiPoly act(const CycMatrix& g, const MultiPoly& f) { return f.substitute_linear(g.inverse()); }

MixedForm act(const CycMatrix& g, const MixedForm& omega) {
  const CycMatrix ginv = g.inverse();
  // x_k -> sum_l (g^{-1})_{kl} x_l: column k of the image matrix is row k of g^{-1}.
  const CycMatrix xcols = ginv.transpose();
  std::map<std::pair<std::uint32_t, std::uint32_t>, MultiPoly> parts;
  for (const auto& [k, c] : omega.terms()) {
    auto [it, ins] = parts.try_emplace({std::get<1>(k), std::get<2>(k)}, MultiPoly(omega.nvars()));
    it->second.add_term(std::get<0>(k), c);
  }
  MixedForm out(omega.nvars());
  for (const auto& [kr, f] : parts) {
    const MultiPoly gf = f.substitute_linear(ginv);
    for (const auto& [K2, cx] : wedge_image(xcols, kr.first)) {
      for (const auto& [R2, cy] : wedge_image(g, kr.second)) out += MixedForm::from(cx * cy * gf, K2, R2);
    }
  }
  return out;
}

Derivation act(const CycMatrix& g, const Derivation& theta) {
  const MixedForm img = act(g, as_form(theta));
  Derivation out;
  for (int j = 0; j < static_cast<int>(theta.size()); ++j) out.push_back(img.component(0, 1u << j));
  return out;
}

}  // namespace reflectia
