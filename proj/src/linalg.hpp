#pragma once

// Small exact linear algebra: int64 matrices for Weyl/Cartan data (rank <= 8),
// rational Gaussian elimination for spans and inverses, and nullspaces over an
// arbitrary coefficient field.

#include <vector>

#include "field.hpp"

namespace ellmod {

using IntVec = std::vector<int64_t>;
using IntMat = std::vector<IntVec>;

inline IntMat int_identity(size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  IntMat r(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline IntVec int_mat_vec(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

// Exact determinant by rational elimination; inputs are tiny (n <= 9).
inline int64_t int_mat_det(const IntMat& a) {
  size_t n = a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(static_cast<long>(a[i][j]));
  Rat det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && sgn(m[piv][k]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      Rat f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  check_internal(det.get_den() == 1, "integer determinant came out fractional");
  Int num = det.get_num();
  check_internal(num.fits_slong_p(), "determinant overflows int64");
  return num.get_si();
}

// Exact inverse of an integer matrix whose inverse is again integral
// (Weyl-group matrices: det = +-1).
inline IntMat int_mat_inverse(const IntMat& a) {
  size_t n = a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = Rat(static_cast<long>(a[i][j]));
    m[i][n + i] = 1;
  }
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && sgn(m[piv][k]) == 0) ++piv;
    check_internal(piv < n, "matrix not invertible");
    std::swap(m[piv], m[k]);
    Rat d = m[k][k];
    for (size_t j = 0; j < 2 * n; ++j) m[k][j] /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == k || sgn(m[i][k]) == 0) continue;
      Rat f = m[i][k];
      for (size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  IntMat inv(n, IntVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      check_internal(m[i][n + j].get_den() == 1, "inverse not integral");
      inv[i][j] = m[i][n + j].get_num().get_si();
    }
  return inv;
}

// Row space over Q: rank and membership tests for is_levi-style span checks.
class RatRowSpace {
 public:
  explicit RatRowSpace(size_t dim) : dim_(dim) {}

  void add(const IntVec& v) {
    std::vector<Rat> row(dim_);
    for (size_t i = 0; i < dim_; ++i) row[i] = Rat(static_cast<long>(v[i]));
    reduce(row);
    if (!all_zero(row)) basis_.push_back(std::move(row));
  }

  bool contains(const IntVec& v) const {
    std::vector<Rat> row(dim_);
    for (size_t i = 0; i < dim_; ++i) row[i] = Rat(static_cast<long>(v[i]));
    reduce(row);
    return all_zero(row);
  }

  size_t rank() const { return basis_.size(); }

 private:
  void reduce(std::vector<Rat>& row) const {
    for (const auto& b : basis_) {
      size_t lead = lead_index(b);
      if (sgn(row[lead]) == 0) continue;
      Rat f = row[lead] / b[lead];
      for (size_t i = 0; i < dim_; ++i) row[i] -= f * b[i];
    }
  }
  static size_t lead_index(const std::vector<Rat>& r) {
    for (size_t i = 0; i < r.size(); ++i)
      if (sgn(r[i]) != 0) return i;
    return r.size();
  }
  static bool all_zero(const std::vector<Rat>& r) {
    for (const auto& x : r)
      if (sgn(x) != 0) return false;
    return true;
  }

  size_t dim_;
  std::vector<std::vector<Rat>> basis_;
};

// Nullspace of an m x n matrix over the field of K, as a basis of column
// vectors.  Used by the Abel–Jacobi evaluation matrices.
template <class K>
std::vector<std::vector<K>> nullspace(std::vector<std::vector<K>> m) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    K inv = elem_from_int(m[r][c], 1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      K f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  K one = elem_from_int(m[0][0], 1);  // any element gives the field context
  K zero = one - one;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<K> v(cols, zero);
    v[free_c] = one;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ellmod
