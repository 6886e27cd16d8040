#include "isoprod/exact_linalg.hpp"

#include <utility>

#include "isoprod/error.hpp"

namespace isoprod {

std::size_t rank(RationalMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == Rational(0)) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == Rational(0)) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

Inertia inertia(RationalMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(ErrorKind::Validation, "linalg", "matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) fail(ErrorKind::Validation, "linalg", "matrix is not symmetric");
  }

  Inertia result;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && m[i][i] != Rational(0)) p = i;
    if (p == n) {
      // Zero diagonal: e_i <- e_i + e_j turns an off-diagonal a_ij into 2 a_ij.
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && m[i][j] != Rational(0)) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;  // the remaining block is zero
      for (std::size_t k = 0; k < n; ++k) m[a][k] += m[b][k];
      for (std::size_t k = 0; k < n; ++k) m[k][a] += m[k][b];
      p = a;
    }
    done[p] = true;
    const Rational pivot = m[p][p];
    (pivot > Rational(0) ? result.positive : result.negative)++;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i][p] == Rational(0)) continue;
      const Rational factor = m[i][p] / pivot;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) m[i][j] -= factor * m[p][j];
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) m[p][i] = m[i][p] = 0;
  }
  result.zero = n - result.positive - result.negative;
  return result;
}

}  // namespace isoprod
