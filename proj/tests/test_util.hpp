// Shared deterministic generators for the property tests.
#pragma once

#include "algenus/intmat.hpp"
#include "algenus/laurent.hpp"
#include "algenus/seifert.hpp"

#include <random>

namespace algenus::testing {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline long long rand_range(std::mt19937& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline LaurentPoly random_poly(std::mt19937& rng, int max_terms = 5, int exp_bound = 8,
                               int coeff_bound = 99) {
  LaurentPoly p;
  int terms = static_cast<int>(rand_range(rng, 0, max_terms));
  for (int i = 0; i < terms; ++i) {
    long long c = rand_range(rng, -coeff_bound, coeff_bound);
    long long e = rand_range(rng, -exp_bound, exp_bound);
    p += LaurentPoly::term(Int(c), e);
  }
  return p;
}

// Random unimodular matrix: a product of at most `ops` elementary row
// operations (transvections, swaps, sign flips) applied to the identity.
inline UnimodularMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops = 10) {
  IntMat p = IntMat::identity(n);
  int count = static_cast<int>(rand_range(rng, 1, ops));
  for (int k = 0; k < count && n > 0; ++k) {
    std::size_t i = static_cast<std::size_t>(rand_range(rng, 0, n - 1));
    std::size_t j = static_cast<std::size_t>(rand_range(rng, 0, n - 1));
    switch (rand_range(rng, 0, 2)) {
      case 0: {
        if (i == j) break;
        long long lambda = rand_range(rng, -2, 2);
        for (std::size_t c = 0; c < n; ++c) p.at(i, c) += lambda * p.at(j, c);
        break;
      }
      case 1:
        if (i != j)
          for (std::size_t c = 0; c < n; ++c) std::swap(p.at(i, c), p.at(j, c));
        break;
      default:
        for (std::size_t c = 0; c < n; ++c) p.at(i, c) = -p.at(i, c);
        break;
    }
  }
  return UnimodularMatrix(std::move(p));
}

// Random knot Seifert pair of genus g: a symmetric matrix plus the standard
// upper-triangular symplectic ones, so that M - M^T is the standard
// unimodular form. When normal_position is set the first two diagonal
// entries are zeroed.
inline SeifertPair random_knot_pair(std::mt19937& rng, int genus, int entry_bound = 3,
                                    bool normal_position = false) {
  std::size_t n = static_cast<std::size_t>(2 * genus);
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Int v = rand_range(rng, -entry_bound, entry_bound);
      m.at(i, j) = v;
      m.at(j, i) = v;
    }
  for (int b = 0; b < genus; ++b) m.at(2 * b, 2 * b + 1) += 1;
  if (normal_position && n >= 2) {
    m.at(0, 0) = 0;
    m.at(1, 1) = 0;
  }
  return SeifertPair(std::move(m), 1);
}

inline IntMat trefoil_matrix() {
  IntMat m(2, 2);
  m.at(0, 0) = -1;
  m.at(0, 1) = 1;
  m.at(1, 1) = -1;
  return m;
}

inline SeifertPair trefoil() { return SeifertPair(trefoil_matrix(), 1); }

inline SeifertPair zero_one_block() {
  IntMat m(2, 2);
  m.at(0, 1) = 1;
  return SeifertPair(std::move(m), 1);
}

}  // namespace algenus::testing
