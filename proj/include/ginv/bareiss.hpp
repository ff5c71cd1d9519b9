#pragma once

#include <utility>
#include <vector>

namespace ginv {

/// Fraction-free (Bareiss) determinant over an integral domain. `divexact`
/// must perform exact division; `is_zero` tests for the ring zero.
template <class T, class DivExact, class IsZero>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& zero, const T& one, DivExact divexact, IsZero is_zero) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && is_zero(m[pivot][k])) ++pivot;
      if (pivot == n) return zero;
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divexact(t, prev);
      }
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = zero - det;
  return det;
}

/// Sylvester matrix of f = Σ f[i]xⁱ (formal degree f.size()-1) and g.
template <class T>
std::vector<std::vector<T>> sylvester_matrix(const std::vector<T>& f, const std::vector<T>& g, const T& zero) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t dim = m + n;
  std::vector<std::vector<T>> s(dim, std::vector<T>(dim, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g[n - k];
  return s;
}

}  // namespace ginv
