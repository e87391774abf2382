#include "algenus/seifert.hpp"

#include "algenus/polydet.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace algenus {

UnimodularMatrix::UnimodularMatrix(IntMat entries) : entries_(std::move(entries)) {
  if (!entries_.is_square())
    throw std::invalid_argument("unimodular matrix must be square");
  Int d = entries_.det();
  if (d != 1 && d != -1)
    throw std::invalid_argument("matrix is not unimodular (determinant not +-1)");
}

SeifertPair::SeifertPair(IntMat mat, int components, Validation validation)
    : mat_(std::move(mat)), components_(components) {
  if (!mat_.is_square()) throw std::invalid_argument("Seifert matrix must be square");
  if (components_ < 1) throw std::invalid_argument("component count must be positive");
  long long n = static_cast<long long>(mat_.rows());
  long long h = n - components_ + 1;
  if (h < 0) {
    std::ostringstream os;
    os << "n - r + 1 = " << h << " is negative";
    throw std::invalid_argument(os.str());
  }
  if (h % 2 != 0) {
    std::ostringstream os;
    os << "n - r + 1 = " << h << " is odd";
    throw std::invalid_argument(os.str());
  }
  if (validation == Validation::strict && h > 0) {
    if ((mat_ - mat_.transpose()).det() != 1)
      throw std::invalid_argument("antisymmetrization of the Seifert form is not unimodular");
  }
}

int SeifertPair::genus() const {
  return static_cast<int>((static_cast<long long>(size()) - components_ + 1) / 2);
}

LaurentPoly alexander_polynomial(const SeifertPair& s) {
  LaurentPoly d = alexander_det(s.matrix());
  if (d.is_zero()) return d;
  return d.canonical();
}

int symmetric_signature(const IntMat& sym) {
  // Congruence diagonalization over Q; zero directions contribute nothing.
  std::size_t n = sym.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(sym.at(i, j));

  auto sym_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a[i][c], a[j][c]);
    for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };
  auto sym_add = [&](std::size_t dst, std::size_t src, const Rat& f) {
    for (std::size_t c = 0; c < n; ++c) a[dst][c] += f * a[src][c];
    for (std::size_t r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
  };

  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // Pull a nonzero diagonal entry into place, manufacturing one from an
      // off-diagonal entry if necessary.
      std::size_t d = k;
      while (d < n && a[d][d] == 0) ++d;
      if (d < n) {
        sym_swap(k, d);
      } else {
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n && pi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != 0) {
              pi = i;
              pj = j;
              break;
            }
        if (pi == n) break;  // remaining block is zero
        sym_add(pi, pj, Rat(1));
        sym_swap(k, pi);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      sym_add(i, k, -a[i][k] / a[k][k]);
    }
    sig += a[k][k] > 0 ? 1 : -1;
  }
  return sig;
}

int signature(const SeifertPair& s) {
  return symmetric_signature(s.matrix() + s.matrix().transpose());
}

SeifertPair congruent_transform(const SeifertPair& s, const UnimodularMatrix& p) {
  if (p.size() != s.size()) throw std::invalid_argument("dimension mismatch");
  return SeifertPair(p.entries().congruence_of(s.matrix()), s.components());
}

SeifertPair stabilize(const SeifertPair& s) {
  std::size_t n = s.size();
  IntMat out(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = s.matrix().at(i, j);
  out.at(n, n + 1) = 1;
  return SeifertPair(std::move(out), s.components());
}

SeifertPair block_sum(const SeifertPair& a, const SeifertPair& b) {
  return SeifertPair(IntMat::block_diag(a.matrix(), b.matrix()),
                     a.components() + b.components() - 1);
}

bool is_alexander_trivial_matrix(const IntMat& m) {
  if (m.rows() % 2 != 0)
    throw std::invalid_argument("Alexander triviality defined for even rank");
  LaurentPoly d = alexander_det(m);
  return d == LaurentPoly::term(1, static_cast<std::int64_t>(m.rows() / 2));
}

bool is_alexander_trivial(const SeifertPair& s) {
  return is_alexander_trivial_matrix(s.matrix());
}

}  // namespace algenus
