#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "amoh/poly.hpp"

namespace amoh {

/// Dense matrix over an exact field, row-major.
template <ExactField F>
using Matrix = std::vector<std::vector<F>>;

/// Solves A x = b exactly by Gauss-Jordan elimination. Free variables are
/// set to zero, so the returned solution is deterministic. Returns nullopt
/// when the system is inconsistent.
template <ExactField F>
std::optional<std::vector<F>> solve_linear(Matrix<F> a, std::vector<F> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && detail::scalar_is_zero(a[p][col])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    const F inv = F(1) / a[row][col];
    for (std::size_t k = col; k < cols; ++k) a[row][k] = a[row][k] * inv;
    b[row] = b[row] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || detail::scalar_is_zero(a[r][col])) continue;
      const F factor = a[r][col];
      for (std::size_t k = col; k < cols; ++k) {
        if (!detail::scalar_is_zero(a[row][k])) a[r][k] = a[r][k] - factor * a[row][k];
      }
      b[r] = b[r] - factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (!detail::scalar_is_zero(b[r])) return std::nullopt;
  }
  std::vector<F> x(cols, F(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
  return x;
}

}  // namespace amoh
