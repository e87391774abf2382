// Exact determinants of matrices with Laurent-polynomial entries, used for
// the Alexander determinant det(t*M - M^T).
#pragma once

#include "algenus/intmat.hpp"
#include "algenus/laurent.hpp"

#include <vector>

namespace algenus {

using PolyMat = std::vector<std::vector<LaurentPoly>>;

// Entry (i,j) = t*m[i][j] - m[j][i].
PolyMat alexander_matrix(const IntMat& m);

// Cofactor expansion along the first row. Exponential; fine for small n.
LaurentPoly det_cofactor(const PolyMat& m);

// Fraction-free (Bareiss) elimination with exact polynomial division and
// row pivoting.
LaurentPoly det_bareiss(const PolyMat& m);

// Dispatches on size: cofactor for n <= 4, Bareiss above.
LaurentPoly det_poly(const PolyMat& m);

// det(t*M - M^T), not unit-normalized.
LaurentPoly alexander_det(const IntMat& m);

}  // namespace algenus
