// Seifert-matrix core: the pair (integer square matrix, component count)
// standing in for a link with a chosen Seifert surface, the classical
// invariants computed from it, and the congruence / stabilization moves.
#pragma once

#include "algenus/intmat.hpp"
#include "algenus/laurent.hpp"

#include <cstddef>

namespace algenus {

class UnimodularMatrix {
 public:
  // Throws unless det(entries) = +-1.
  explicit UnimodularMatrix(IntMat entries);

  const IntMat& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  IntMat entries_;
};

class SeifertPair {
 public:
  enum class Validation {
    strict,  // full invariant check, including unimodular antisymmetrization
    raw      // restricted forms: skip the unimodularity check
  };

  // n x n Seifert matrix plus the link component count r. Requires
  // n - r + 1 even and >= 0; in strict mode additionally
  // det(mat - mat^T) = 1 whenever n - r + 1 > 0.
  SeifertPair(IntMat mat, int components, Validation validation = Validation::strict);

  // The unknot: empty matrix, one component.
  SeifertPair() : SeifertPair(IntMat(), 1) {}

  const IntMat& matrix() const { return mat_; }
  int components() const { return components_; }
  std::size_t size() const { return mat_.rows(); }

  // (n - r + 1) / 2.
  int genus() const;

 private:
  IntMat mat_;
  int components_;
};

// Unit-normalized det(t*M - M^T); the zero polynomial for degenerate
// (split-link) forms. The empty matrix gives 1.
LaurentPoly alexander_polynomial(const SeifertPair& s);

// Signature of M + M^T, computed exactly over the rationals.
int signature(const SeifertPair& s);

// Exact signature of a symmetric integer matrix.
int symmetric_signature(const IntMat& sym);

// Basis change (P^T M P, r).
SeifertPair congruent_transform(const SeifertPair& s, const UnimodularMatrix& p);

// Appends two rows/columns that are zero except for a 1 at (n+1, n+2).
SeifertPair stabilize(const SeifertPair& s);

// Block-diagonal sum; component counts combine as r1 + r2 - 1.
SeifertPair block_sum(const SeifertPair& a, const SeifertPair& b);

// det(t*M - M^T) == t^(n/2) exactly, for even n.
bool is_alexander_trivial_matrix(const IntMat& m);
bool is_alexander_trivial(const SeifertPair& s);

}  // namespace algenus
