// Quadratic-residue arithmetic and the anisotropic-form certificate
// pipeline: Legendre symbols, witness primes, the four-twist-region knot
// family K(a,b,c,d), its rational diagonalization, and the certificate
// generator for twist pairs whose product is not minus a square.
#pragma once

#include "algenus/ints.hpp"
#include "algenus/seifert.hpp"

#include <optional>
#include <vector>

namespace algenus {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(unsigned long long n);

// Legendre symbol (n/p) in {-1, 0, +1} by Euler's criterion. Throws unless
// p is an odd prime.
int legendre(const Int& n, long long p);

// Smallest odd prime p with (n/p) = -1, for positive non-square n.
long long find_witness_prime(long long n);

// Sufficient anisotropy test for a*x1^2 - b*x2^2 + p*(m*x3^2 + n*x4^2):
// true iff (a*b/p) = -1. Requires a, b, m, n positive and coprime to p.
// A false result means the criterion is inconclusive, not that the form
// is isotropic.
bool anisotropic_by_criterion(long long a, long long b, long long p, long long m,
                              long long n);

// Diagonal integer quadratic form; coefficients are nonzero.
struct QuadForm {
  std::vector<Int> diag;

  explicit QuadForm(std::vector<Int> coefficients);
  QuadForm() = default;
  std::size_t rank() const { return diag.size(); }
};

// Coordinate values in the order the bounded searches enumerate them:
// 0, -1, 1, -2, 2, ..., -bound, bound.
std::vector<long long> search_order(long long bound);

// Exhaustive search for a nonzero integer zero of the form with entries in
// [-bound, bound]. Returns the smallest solution under the coordinate order
// 0 < -1 < 1 < -2 < 2 < ... applied lexicographically, or nothing. Absence
// certifies anisotropy only within the bound.
std::optional<std::vector<long long>> brute_force_isotropy(const QuadForm& form,
                                                           long long bound);

// Seifert matrix of the knot K(a,b,c,d): four twist regions with the given
// full-twist counts.
SeifertPair k_abcd_matrix(long long a, long long b, long long c, long long d);

// Integer diagonalization (a, -|b|, a(4ac-1), |b|(4|b|d+1)) of the
// K(a,b,c,d) quadratic form, valid for a > 0 > b. Isotropy over Q is
// preserved.
QuadForm diagonalize_kabcd(long long a, long long b, long long c, long long d);

struct CounterexampleCert {
  enum class Branch {
    anisotropic,  // mixed-sign twists: anisotropy certificate via witness prime
    signature     // same-sign twists: |signature| = 4 obstruction
  };

  long long m = 0, n = 0;        // input twist coefficients
  long long a = 0, b = 0;        // normalized twist pair (a > 0)
  long long c = 0, d = 0;        // lower twist regions
  long long p = 0;               // witness prime (anisotropic branch only)
  Branch branch = Branch::anisotropic;
  QuadForm diag_form;            // anisotropic branch only
  long long search_bound = 0;    // brute-force isotropy search radius
  bool exhausted = false;        // search completed without finding a zero
  int signature_value = 0;       // signature branch only
};

// Builds the certificate that the pair (m, n) of null-homologous twists can
// change the genus by two: picks K(a,b,c,d), the witness prime, the smallest
// valid c and d, and cross-checks by bounded brute-force search. Throws when
// -m*n is a perfect square.
CounterexampleCert construct_counterexample(long long m, long long n,
                                            long long search_bound = 25);

}  // namespace algenus
