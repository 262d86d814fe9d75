#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reflectia/cyclotomic.hpp"

namespace reflectia {

// Square matrix over Q(zeta_m), row major.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(int n, int m);
  static CycMatrix identity(int n, int m);
  static CycMatrix diagonal(const std::vector<Cyclotomic>& d, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const Cyclotomic& at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, const Cyclotomic& v);

  CycMatrix embed(int M) const;
  CycMatrix conj_transpose() const;
  CycMatrix transpose() const;
  // Gaussian elimination over the field; throws InvalidArgument if singular.
  CycMatrix inverse() const;
  Cyclotomic det() const;
  // Coefficients of det(x I - A), lowest degree first, length n + 1.
  std::vector<Cyclotomic> charpoly() const;
  // Rank of A - I, by elimination.
  int rank_minus_identity() const;
  bool is_identity() const;
  bool is_scalar() const;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }
  std::size_t hash() const;
  std::string str() const;

 private:
  int n_ = 0;
  int m_ = 1;
  std::vector<Cyclotomic> a_;
};

// Division free characteristic polynomial (Berkowitz). Ops supplies
// zero(), one(), add(a,b), mul(a,b), neg(a). A is row major n x n. Returns
// the coefficients of det(x I - A), lowest degree first.
template <class T, class Ops>
std::vector<T> berkowitz_charpoly(const std::vector<T>& A, int n, const Ops& ops) {
  if (n == 0) return {ops.one()};
  auto at = [&](int i, int j) -> const T& { return A[static_cast<std::size_t>(i * n + j)]; };
  // poly holds coefficients from the highest degree down, for the leading
  // k x k principal submatrix.
  std::vector<T> poly{ops.one(), ops.neg(at(0, 0))};
  for (int k = 1; k < n; ++k) {
    // Submatrix of size k+1: M = A[0..k-1][0..k-1], C = A[0..k-1][k], R = A[k][0..k-1], a = A[k][k].
    std::vector<T> items;
    items.reserve(static_cast<std::size_t>(k) + 2);
    items.push_back(ops.one());
    items.push_back(ops.neg(at(k, k)));
    std::vector<T> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = at(i, k);
    for (int p = 0; p < k; ++p) {
      // -R M^p C
      T acc = ops.zero();
      for (int i = 0; i < k; ++i) acc = ops.add(acc, ops.mul(at(k, i), v[static_cast<std::size_t>(i)]));
      items.push_back(ops.neg(acc));
      if (p + 1 < k) {
        std::vector<T> w(static_cast<std::size_t>(k), ops.zero());
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) w[static_cast<std::size_t>(i)] = ops.add(w[static_cast<std::size_t>(i)], ops.mul(at(i, j), v[static_cast<std::size_t>(j)]));
        }
        v = std::move(w);
      }
    }
    // Lower triangular Toeplitz (k+2) x (k+1) with first column items.
    std::vector<T> next(static_cast<std::size_t>(k) + 2, ops.zero());
    for (int i = 0; i < k + 2; ++i) {
      for (int j = 0; j <= std::min(i, k); ++j) {
        next[static_cast<std::size_t>(i)] = ops.add(next[static_cast<std::size_t>(i)], ops.mul(items[static_cast<std::size_t>(i - j)], poly[static_cast<std::size_t>(j)]));
      }
    }
    poly = std::move(next);
  }
  std::vector<T> out(poly.rbegin(), poly.rend());
  return out;
}

}  // namespace reflectia
