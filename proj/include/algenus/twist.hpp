// Null-homologous twisting at the Seifert-matrix level: twist application in
// normal position, the square-pair factorization m = -a*x^2, n = a*y^2, and
// the stabilize-then-reduce congruence that removes the twists again at the
// cost of one stabilization.
#pragma once

#include "algenus/seifert.hpp"

#include <cstddef>
#include <utility>

namespace algenus {

struct TwistSpec {
  long long m = 0;  // first twist coefficient, m = -a*x^2
  long long n = 0;  // second twist coefficient, n = a*y^2
  long long a = 0;
  long long x = 0;
  long long y = 0;

  // Throws unless m = -a*x^2 and n = a*y^2 hold exactly.
  void validate() const;
};

// Deterministic factorization of a twist pair with -m*n a perfect square:
// largest |x| whose square divides |m| compatible with a shared a. Throws
// when -m*n is not a perfect square.
TwistSpec factor_square_pair(long long m, long long n);

// Writes -m and -n onto the zero diagonal entries i and j (0-based). The
// normal-position precondition is that both diagonal entries vanish.
SeifertPair apply_twists(const SeifertPair& s, std::size_t i, std::size_t j,
                         long long m, long long n);

// Both sides of the stabilize-and-reduce matrix identity, with the square
// blocks a, b, c, d (all s x s) and the scalar entries x, y, a*x, a*y
// replaced by the matching multiples of the s x s identity. The identity
// holds for all inputs; the builder is exposed so tests can compare sides
// and corrupt one of them.
std::pair<IntMat, IntMat> twist_identity_sides(const IntMat& a, const IntMat& b,
                                               const IntMat& c, const IntMat& d,
                                               long long coeff_a, long long coeff_x,
                                               long long coeff_y);

bool verify_twist_identity(const IntMat& a, const IntMat& b, const IntMat& c,
                           const IntMat& d, long long coeff_a, long long coeff_x,
                           long long coeff_y);

// Undoes the twists at entries i and j by stabilizing once and changing
// basis: the result is the (n+2) x (n+2) reduced matrix whose principal
// n x n block has zeros back on the two twist diagonals.
SeifertPair untwist_stabilize(const SeifertPair& s, std::size_t i, std::size_t j,
                              const TwistSpec& spec);

}  // namespace algenus
