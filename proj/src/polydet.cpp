#include "algenus/polydet.hpp"

#include <stdexcept>
#include <utility>

namespace algenus {

PolyMat alexander_matrix(const IntMat& m) {
  if (!m.is_square()) throw std::invalid_argument("Alexander matrix of non-square input");
  std::size_t n = m.rows();
  PolyMat out(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i][j] = LaurentPoly::term(m.at(i, j), 1) - LaurentPoly::constant(m.at(j, i));
  return out;
}

LaurentPoly det_cofactor(const PolyMat& m) {
  std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  if (n == 1) return m[0][0];
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMat minor(n - 1, std::vector<LaurentPoly>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[i - 1][cc++] = m[i][c];
      }
    }
    LaurentPoly contrib = m[0][j] * det_cofactor(minor);
    if (j % 2 == 0)
      acc += contrib;
    else
      acc -= contrib;
  }
  return acc;
}

LaurentPoly det_bareiss(const PolyMat& m) {
  std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1);
  PolyMat w = m;
  LaurentPoly prev = LaurentPoly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && w[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly();
      std::swap(w[k], w[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        w[i][j] = exact_div(w[i][j] * w[k][k] - w[i][k] * w[k][j], prev);
    prev = w[k][k];
  }
  return sign > 0 ? w[n - 1][n - 1] : -w[n - 1][n - 1];
}

LaurentPoly det_poly(const PolyMat& m) {
  return m.size() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

LaurentPoly alexander_det(const IntMat& m) { return det_poly(alexander_matrix(m)); }

}  // namespace algenus
