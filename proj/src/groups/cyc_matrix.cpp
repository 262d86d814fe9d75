#include "reflectia/cyc_matrix.hpp"

#include <sstream>

#include "reflectia/error.hpp"

namespace reflectia {

namespace {

struct CycOps {
  int m;
  Cyclotomic zero() const { return Cyclotomic(Rational(0), m); }
  Cyclotomic one() const { return Cyclotomic(Rational(1), m); }
  Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b) const { return a + b; }
  Cyclotomic mul(const Cyclotomic& a, const Cyclotomic& b) const { return a * b; }
  Cyclotomic neg(const Cyclotomic& a) const { return -a; }
};

}  // namespace

CycMatrix::CycMatrix(int n, int m) : n_(n), m_(m), a_(static_cast<std::size_t>(n * n), Cyclotomic(Rational(0), m)) {}

CycMatrix CycMatrix::identity(int n, int m) {
  CycMatrix out(n, m);
  for (int i = 0; i < n; ++i) out.set(i, i, Cyclotomic(Rational(1), m));
  return out;
}

CycMatrix CycMatrix::diagonal(const std::vector<Cyclotomic>& d, int m) {
  CycMatrix out(static_cast<int>(d.size()), m);
  for (int i = 0; i < out.n_; ++i) out.set(i, i, d[static_cast<std::size_t>(i)]);
  return out;
}

void CycMatrix::set(int i, int j, const Cyclotomic& v) {
  if (m_ % v.order() != 0) throw InvalidArgument("matrix entry lives outside Q(zeta_" + std::to_string(m_) + ")");
  a_[static_cast<std::size_t>(i * n_ + j)] = v.embed(m_);
}

CycMatrix CycMatrix::embed(int M) const {
  CycMatrix out(n_, M);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k].embed(M);
  return out;
}

CycMatrix CycMatrix::conj_transpose() const {
  CycMatrix out(n_, m_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.a_[static_cast<std::size_t>(j * n_ + i)] = at(i, j).conj();
  }
  return out;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix out(n_, m_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.a_[static_cast<std::size_t>(j * n_ + i)] = at(i, j);
  }
  return out;
}

CycMatrix CycMatrix::inverse() const {
  CycMatrix a = *this;
  CycMatrix inv = identity(n_, m_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r) {
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw InvalidArgument("singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a.a_[static_cast<std::size_t>(pivot * n_ + j)], a.a_[static_cast<std::size_t>(col * n_ + j)]);
        std::swap(inv.a_[static_cast<std::size_t>(pivot * n_ + j)], inv.a_[static_cast<std::size_t>(col * n_ + j)]);
      }
    }
    const Cyclotomic p = a.at(col, col).inverse();
    for (int j = 0; j < n_; ++j) {
      a.a_[static_cast<std::size_t>(col * n_ + j)] *= p;
      inv.a_[static_cast<std::size_t>(col * n_ + j)] *= p;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const Cyclotomic f = a.at(r, col);
      for (int j = 0; j < n_; ++j) {
        a.a_[static_cast<std::size_t>(r * n_ + j)] -= f * a.at(col, j);
        inv.a_[static_cast<std::size_t>(r * n_ + j)] -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<Cyclotomic> CycMatrix::charpoly() const { return berkowitz_charpoly(a_, n_, CycOps{m_}); }

Cyclotomic CycMatrix::det() const {
  auto cp = charpoly();
  // det(xI - A) at x = 0 is (-1)^n det A.
  return (n_ % 2 == 0) ? cp[0] : -cp[0];
}

int CycMatrix::rank_minus_identity() const {
  CycMatrix a = *this;
  for (int i = 0; i < n_; ++i) a.a_[static_cast<std::size_t>(i * n_ + i)] -= Cyclotomic(Rational(1), m_);
  int rank = 0;
  for (int col = 0; col < n_ && rank < n_; ++col) {
    int pivot = -1;
    for (int r = rank; r < n_; ++r) {
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < n_; ++j) std::swap(a.a_[static_cast<std::size_t>(pivot * n_ + j)], a.a_[static_cast<std::size_t>(rank * n_ + j)]);
    const Cyclotomic p = a.at(rank, col).inverse();
    for (int r = rank + 1; r < n_; ++r) {
      if (a.at(r, col).is_zero()) continue;
      const Cyclotomic f = a.at(r, col) * p;
      for (int j = 0; j < n_; ++j) a.a_[static_cast<std::size_t>(r * n_ + j)] -= f * a.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

bool CycMatrix::is_identity() const { return *this == identity(n_, m_); }

bool CycMatrix::is_scalar() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
    }
    if (at(i, i) != at(0, 0)) return false;
  }
  return true;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
  const int M = static_cast<int>(lcm_int(a.m_, b.m_));
  const CycMatrix& aa = a.m_ == M ? a : a.embed(M);
  const CycMatrix& bb = b.m_ == M ? b : b.embed(M);
  CycMatrix out(a.n_, M);
  for (int i = 0; i < a.n_; ++i) {
    for (int k = 0; k < a.n_; ++k) {
      const Cyclotomic& x = aa.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < a.n_; ++j) {
        const Cyclotomic& y = bb.at(k, j);
        if (y.is_zero()) continue;
        out.a_[static_cast<std::size_t>(i * a.n_ + j)] += x * y;
      }
    }
  }
  return out;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t k = 0; k < a.a_.size(); ++k) {
    if (a.a_[k] != b.a_[k]) return false;
  }
  return true;
}

std::size_t CycMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& x : a_) h = h * 1000003u ^ x.hash();
  return h;
}

std::string CycMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? "; " : "") << "[";
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace reflectia
