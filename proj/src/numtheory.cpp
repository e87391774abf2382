#include "algenus/numtheory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace algenus {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod(acc, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  // This base set decides primality for every 64-bit integer.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

int legendre(const Int& n, long long p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<u64>(p)))
    throw std::invalid_argument("Legendre symbol requires an odd prime modulus");
  Int r = n % p;
  if (r < 0) r += p;
  auto residue = static_cast<u64>(r);
  if (residue == 0) return 0;
  u64 e = powmod(residue, static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
  return e == 1 ? 1 : -1;
}

long long find_witness_prime(long long n) {
  if (n <= 0) throw std::invalid_argument("witness prime requires a positive integer");
  if (is_perfect_square(Int(n)))
    throw std::invalid_argument("every odd prime gives symbol 0 or 1");
  for (long long p = 3;; p += 2) {
    if (!is_prime_u64(static_cast<u64>(p))) continue;
    if (legendre(Int(n), p) == -1) return p;
  }
}

bool anisotropic_by_criterion(long long a, long long b, long long p, long long m,
                              long long n) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<u64>(p)))
    throw std::invalid_argument("criterion requires an odd prime");
  for (long long v : {a, b, m, n}) {
    if (v <= 0) throw std::invalid_argument("criterion requires positive coefficients");
    if (v % p == 0)
      throw std::invalid_argument("criterion requires coefficients coprime to p");
  }
  return legendre(Int(a) * b, p) == -1;
}

QuadForm::QuadForm(std::vector<Int> coefficients) : diag(std::move(coefficients)) {
  for (const Int& c : diag)
    if (c == 0)
      throw std::invalid_argument("quadratic form coefficients must be nonzero");
}

std::vector<long long> search_order(long long bound) {
  std::vector<long long> vals;
  vals.reserve(2 * bound + 1);
  vals.push_back(0);
  for (long long v = 1; v <= bound; ++v) {
    vals.push_back(-v);
    vals.push_back(v);
  }
  return vals;
}

namespace {

// DFS over coordinates with per-coordinate precomputed d_i * v^2 tables.
// Scalar is long long when the partial sums provably fit, Int otherwise.
template <typename Scalar>
bool search_isotropy(const std::vector<std::vector<Scalar>>& tables,
                     const std::vector<long long>& vals, std::size_t idx,
                     const Scalar& acc, std::vector<long long>& current,
                     std::vector<long long>& out) {
  if (idx == tables.size()) {
    if (acc != 0) return false;
    for (long long v : current)
      if (v != 0) {
        out = current;
        return true;
      }
    return false;
  }
  for (std::size_t vi = 0; vi < vals.size(); ++vi) {
    current[idx] = vals[vi];
    Scalar next = acc + tables[idx][vi];
    if (search_isotropy(tables, vals, idx + 1, next, current, out)) return true;
  }
  return false;
}

template <typename Scalar>
std::optional<std::vector<long long>> run_isotropy_search(const QuadForm& form,
                                                          const std::vector<long long>& vals) {
  std::vector<std::vector<Scalar>> tables(form.rank());
  for (std::size_t i = 0; i < form.rank(); ++i) {
    tables[i].reserve(vals.size());
    for (long long v : vals)
      tables[i].push_back(static_cast<Scalar>(form.diag[i] * v * v));
  }
  std::vector<long long> current(form.rank(), 0), out;
  if (search_isotropy(tables, vals, 0, Scalar(0), current, out)) return out;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<long long>> brute_force_isotropy(const QuadForm& form,
                                                           long long bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be positive");
  if (form.rank() == 0) return std::nullopt;
  auto vals = search_order(bound);

  Int worst = 0;
  for (const Int& c : form.diag) worst += abs(c) * bound * bound;
  if (worst < (Int(1) << 62)) return run_isotropy_search<long long>(form, vals);
  return run_isotropy_search<Int>(form, vals);
}

SeifertPair k_abcd_matrix(long long a, long long b, long long c, long long d) {
  IntMat m(4, 4);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  m.at(3, 3) = d;
  m.at(0, 2) = 1;
  m.at(1, 3) = 1;
  return SeifertPair(std::move(m), 1);
}

QuadForm diagonalize_kabcd(long long a, long long b, long long c, long long d) {
  if (a <= 0 || b >= 0)
    throw std::invalid_argument("diagonalization requires a > 0 > b");
  Int bb = -Int(b);
  std::vector<Int> diag{Int(a), -bb, Int(a) * (4 * Int(a) * c - 1),
                        bb * (4 * bb * d + 1)};
  return QuadForm(std::move(diag));
}

namespace {

// Smallest k >= 1 with p | (step*k + offset) and p^2 not dividing it.
// The search is capped at 10*p^2; the cap is never reached for valid inputs.
long long smallest_divisible_not_square(long long step, long long offset, long long p) {
  for (long long k = 1; k <= 10 * p * p; ++k) {
    Int v = Int(step) * k + offset;
    if (v % p != 0) continue;
    if (v % (Int(p) * p) == 0) continue;
    return k;
  }
  throw std::runtime_error("no admissible twist count below 10*p^2");
}

}  // namespace

CounterexampleCert construct_counterexample(long long m, long long n,
                                            long long search_bound) {
  Int product = -Int(m) * n;
  if (is_perfect_square(product))
    throw std::invalid_argument(
        "-m*n is a perfect square: such twist pairs change the genus by at most one");

  CounterexampleCert cert;
  cert.m = m;
  cert.n = n;
  cert.search_bound = search_bound;

  if (product < 0) {
    // Same-sign pair: K(a,b,1,1) has |signature| = 4. Work with the positive
    // representatives (both-negative pairs use the mirror construction).
    long long a = m, b = n;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    cert.branch = CounterexampleCert::Branch::signature;
    cert.a = a;
    cert.b = b;
    cert.c = 1;
    cert.d = 1;
    cert.signature_value = signature(k_abcd_matrix(a, b, 1, 1));
    if (cert.signature_value != 4)
      throw std::logic_error("signature obstruction failed to materialize");
    return cert;
  }

  long long a = m > 0 ? m : n;
  long long b = m > 0 ? n : m;
  cert.branch = CounterexampleCert::Branch::anisotropic;
  cert.a = a;
  cert.b = b;
  long long babs = -b;

  cert.p = find_witness_prime(a * babs);
  cert.c = smallest_divisible_not_square(4 * a, -1, cert.p);
  cert.d = smallest_divisible_not_square(4 * babs, 1, cert.p);
  cert.diag_form = diagonalize_kabcd(a, b, cert.c, cert.d);

  // The two scaled coefficients divided by p must stay coprime to p and
  // positive for the criterion to apply.
  Int mm = cert.diag_form.diag[2] / cert.p;
  Int nn = cert.diag_form.diag[3] / cert.p;
  if (!anisotropic_by_criterion(a, babs, cert.p, static_cast<long long>(mm),
                                static_cast<long long>(nn)))
    throw std::logic_error("anisotropy criterion rejected constructed certificate");

  cert.exhausted = !brute_force_isotropy(cert.diag_form, search_bound).has_value();
  if (!cert.exhausted)
    throw std::logic_error("brute-force search found an isotropic vector");
  return cert;
}

}  // namespace algenus
