#pragma once

// Dense exact linear algebra: row reduction over fields and fraction-free
// determinants over integral domains.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace odeq {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
Matrix<K> zero_matrix(size_t rows, size_t cols) {
  return Matrix<K>(rows, std::vector<K>(cols, K(0)));
}

// In-place reduced row echelon form; returns the pivot columns.
template <class K>
std::vector<size_t> rref(Matrix<K>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const K inv = K(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const K factor = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
size_t rank(Matrix<K> m) {
  return rref(m).size();
}

// Basis of {x : m x = 0}, one vector per free column.
template <class K>
std::vector<std::vector<K>> nullspace(Matrix<K> m, size_t cols) {
  std::vector<std::vector<K>> basis;
  if (m.empty()) {
    for (size_t c = 0; c < cols; ++c) {
      std::vector<K> v(cols, K(0));
      v[c] = K(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  auto pivots = rref(m);
  std::vector<int> pivot_row(cols, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);
  for (size_t f = 0; f < cols; ++f) {
    if (pivot_row[f] >= 0) continue;
    std::vector<K> v(cols, K(0));
    v[f] = K(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of m x = b, or nullopt if inconsistent. Free variables are 0.
template <class K>
std::optional<std::vector<K>> solve_linear(const Matrix<K>& m, const std::vector<K>& b,
                                           size_t cols) {
  Matrix<K> aug = m;
  if (aug.size() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  if (aug.empty()) return std::vector<K>(cols, K(0));
  auto pivots = rref(aug);
  std::vector<K> x(cols, K(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = aug[i][cols];
  }
  return x;
}

// Bareiss fraction-free determinant; R needs exact_quotient.
template <class R>
R bareiss_det(Matrix<R> m) {
  const size_t n = m.size();
  if (n == 0) return R(1);
  R prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return R(0);
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        R t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(t, prev);
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace odeq
