#pragma once

#include <vector>

#include "superali/rat.hpp"

namespace superali {

/// Dense rational matrix helpers for basis construction (row-major).
using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix rat_matrix(std::size_t rows, std::size_t cols) {
  return RatMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

/// Basis of the nullspace of M (rows = constraints, cols = unknowns).
inline std::vector<std::vector<Rational>> nullspace(RatMatrix M, std::size_t cols) {
  std::size_t rows = M.size();
  std::vector<std::size_t> piv_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && rat_is_zero(M[pr][c])) ++pr;
    if (pr == rows) continue;
    std::swap(M[r], M[pr]);
    Rational pv = M[r][c];
    for (auto& x : M[r]) x /= pv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || rat_is_zero(M[i][c])) continue;
      Rational f = M[i][c];
      for (std::size_t j = 0; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    piv_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  std::size_t pi = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pi < piv_cols.size() && piv_cols[pi] == c) {
      ++pi;
      continue;
    }
    std::vector<Rational> v(cols, Rational(0));
    v[c] = 1;
    for (std::size_t k = 0; k < piv_cols.size(); ++k) v[piv_cols[k]] = -M[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace superali
