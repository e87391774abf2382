#include "algenus/genus_bounds.hpp"

#include "algenus/numtheory.hpp"
#include "algenus/polydet.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace algenus {

namespace {

// All nonzero vectors in [-bound, bound]^n, smallest first under the shared
// coordinate order. The first vector generated is (0, ..., 0, -1).
std::vector<std::vector<Int>> candidate_columns(std::size_t n, int bound) {
  auto vals = search_order(bound);
  std::vector<std::vector<Int>> out;
  std::vector<std::size_t> odo(n, 0);
  std::vector<Int> cur(n, 0);
  while (true) {
    // Advance the odometer (last coordinate fastest).
    std::size_t pos = n;
    bool done = n == 0;
    while (pos > 0) {
      --pos;
      if (++odo[pos] < vals.size()) {
        cur[pos] = vals[odo[pos]];
        break;
      }
      odo[pos] = 0;
      cur[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) return out;
    out.push_back(cur);
  }
}

std::vector<Int> apply_matrix(const IntMat& m, const std::vector<Int>& v) {
  std::size_t n = m.rows();
  std::vector<Int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Incremental fraction-free elimination state for independence tests.
struct EliminationState {
  std::vector<std::vector<Int>> rows;  // reduced rows

  // Reduces v against the stored rows; if independent, stores the reduced
  // vector and returns true (leaving the state extended).
  bool try_add(std::vector<Int> v) {
    for (const auto& row : rows) {
      std::size_t p = 0;
      while (p < row.size() && row[p] == 0) ++p;
      if (p == row.size() || v[p] == 0) continue;
      Int a = row[p], b = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * a - row[j] * b;
    }
    for (const Int& c : v)
      if (c != 0) {
        rows.push_back(std::move(v));
        return true;
      }
    return false;
  }
};

IntMat columns_to_matrix(std::size_t n, const std::vector<std::vector<Int>>& candidates,
                         const std::vector<std::size_t>& idx) {
  IntMat v(n, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) v.at(i, j) = candidates[idx[j]][i];
  return v;
}

bool restriction_is_alexander_trivial(const IntMat& g) {
  std::size_t k2 = g.rows();
  // Integer filters first: det(tG - G^T) at t = 1 and t = -1 must agree
  // with t^(k2/2).
  if ((g - g.transpose()).det() != 1) return false;
  Int sym = (g + g.transpose()).det();
  if (sym != (k2 / 2 % 2 == 0 ? 1 : -1)) return false;
  return is_alexander_trivial_matrix(g);
}

// DFS over strictly increasing index tuples into the candidate list; the
// first tuple both callbacks accept (lexicographically smallest) wins.
// can_extend(chosen_indices, next_index) filters partial tuples; accept is
// called at full depth.
template <typename Accept, typename Extend>
bool tuple_search(const std::vector<std::vector<Int>>& candidates, std::size_t depth,
                  Accept&& accept, Extend&& can_extend, EliminationState& elim,
                  std::vector<std::size_t>& chosen, std::size_t start) {
  if (chosen.size() == depth) return accept(chosen);
  for (std::size_t i = start; i < candidates.size(); ++i) {
    if (!can_extend(chosen, i)) continue;
    EliminationState saved = elim;
    if (!elim.try_add(candidates[i])) {
      elim = std::move(saved);
      continue;
    }
    chosen.push_back(i);
    if (tuple_search(candidates, depth, accept, can_extend, elim, chosen, i + 1))
      return true;
    chosen.pop_back();
    elim = std::move(saved);
  }
  return false;
}

}  // namespace

bool verify_witness(const SeifertPair& s, const SubgroupWitness& w) {
  const IntMat& v = w.basis;
  if (v.rows() != s.size() || v.cols() == 0) return false;
  if (v.rank() != v.cols()) return false;
  IntMat g = v.congruence_of(s.matrix());
  if (w.kind == WitnessKind::alexander_trivial) {
    if (v.cols() % 2 != 0) return false;
    return is_alexander_trivial_matrix(g);
  }
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g.at(i, j) != 0) return false;
  return true;
}

GenusBoundResult galg_upper_bound(const SeifertPair& s, int coeff_bound) {
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::size_t n = s.size();
  int h = static_cast<int>(n) - s.components() + 1;
  int genus = s.genus();

  std::vector<std::vector<Int>> candidates;
  for (int k = h / 2; k >= 1; --k) {
    std::size_t rank2k = static_cast<std::size_t>(2 * k);
    if (rank2k == n) {
      // A full-rank Alexander-trivial subgroup must be the full lattice (the
      // determinant scales by the square of the index), so this level is a
      // single test with the identity basis.
      if (is_alexander_trivial(s))
        return {genus - k,
                SubgroupWitness{IntMat::identity(n), WitnessKind::alexander_trivial}};
      continue;
    }
    if (candidates.empty()) candidates = candidate_columns(n, coeff_bound);
    EliminationState elim;
    std::vector<std::size_t> chosen;
    IntMat found;
    bool ok = tuple_search(
        candidates, rank2k,
        [&](const std::vector<std::size_t>& idx) {
          IntMat basis = columns_to_matrix(n, candidates, idx);
          if (!restriction_is_alexander_trivial(basis.congruence_of(s.matrix())))
            return false;
          found = std::move(basis);
          return true;
        },
        [](const auto&, std::size_t) { return true; }, elim, chosen, 0);
    if (ok) return {genus - k, SubgroupWitness{found, WitnessKind::alexander_trivial}};
  }
  return {genus, std::nullopt};
}

namespace {

// The four-twist-region anisotropy certificate, for 4x4 matrices of the
// K(a,b,c,d) shape (or its negation): some odd prime must divide both scaled
// diagonal coefficients exactly once and see a*|b| as a non-residue.
bool kabcd_anisotropy_certificate(const IntMat& m) {
  if (m.rows() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      Int expected = (i == 0 && j == 2) || (i == 1 && j == 3) ? 1 : 0;
      if (m.at(i, j) != expected) return false;
    }
  const Int limit = std::numeric_limits<long long>::max() / 8;
  for (std::size_t i = 0; i < 4; ++i)
    if (abs(m.at(i, i)) > limit) return false;
  auto a = static_cast<long long>(m.at(0, 0));
  auto b = static_cast<long long>(m.at(1, 1));
  auto c = static_cast<long long>(m.at(2, 2));
  auto d = static_cast<long long>(m.at(3, 3));
  if (a < 0 && b > 0) {
    // theta and -theta have the same isotropic vectors.
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  if (a <= 0 || b >= 0) return false;
  long long babs = -b;
  Int u = 4 * Int(a) * c - 1;
  Int v = 4 * Int(babs) * d + 1;
  Int g = gcd(abs(u), abs(v));

  std::vector<long long> primes;
  Int rest = g;
  for (long long p = 3; Int(p) * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    primes.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1 && rest <= limit) primes.push_back(static_cast<long long>(rest));

  for (long long p : primes) {
    if (a % p == 0 || babs % p == 0) continue;
    if (u % (Int(p) * p) == 0 || v % (Int(p) * p) == 0) continue;
    if (legendre(Int(a) * babs, p) == -1) return true;
  }
  return false;
}

}  // namespace

TaylorResult isotropic_rank(const SeifertPair& s, int coeff_bound) {
  if (s.components() != 1) throw std::invalid_argument("Taylor invariant requires a knot");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::size_t n = s.size();
  int g = s.genus();

  TaylorResult res;
  if (g == 0) {
    res.exact = true;
    return res;
  }

  // Only vectors with vanishing self-pairing can enter an isotropic subgroup.
  const IntMat& m = s.matrix();
  std::vector<std::vector<Int>> candidates;
  std::vector<std::vector<Int>> images;  // M * v per kept candidate
  for (auto& v : candidate_columns(n, coeff_bound)) {
    std::vector<Int> mv = apply_matrix(m, v);
    if (dot(v, mv) == 0) {
      candidates.push_back(std::move(v));
      images.push_back(std::move(mv));
    }
  }

  auto pairs_to_zero = [&](const std::vector<std::size_t>& chosen, std::size_t next) {
    const auto& v = candidates[next];
    const auto& mv = images[next];
    for (std::size_t ui : chosen) {
      if (dot(candidates[ui], mv) != 0) return false;
      if (dot(v, images[ui]) != 0) return false;
    }
    return true;
  };

  for (int k = g; k >= 1; --k) {
    EliminationState elim;
    std::vector<std::size_t> chosen;
    IntMat found;
    bool ok = tuple_search(
        candidates, static_cast<std::size_t>(k),
        [&](const std::vector<std::size_t>& idx) {
          found = columns_to_matrix(n, candidates, idx);
          return true;
        },
        pairs_to_zero, elim, chosen, 0);
    if (ok) {
      res.lower_rank = k;
      res.witness = SubgroupWitness{found, WitnessKind::isotropic};
      break;
    }
  }

  res.taylor_hi = g - res.lower_rank;
  if (res.lower_rank == g) {
    res.exact = true;
  } else if (res.lower_rank == 0) {
    // Anisotropy certificates pin a(theta) = 0.
    bool definite =
        std::abs(symmetric_signature(m + m.transpose())) == static_cast<int>(n);
    if (definite || kabcd_anisotropy_certificate(m)) res.exact = true;
  }
  res.taylor_lo = res.exact ? res.taylor_hi : 0;
  return res;
}

long long satellite_bound(long long bound_pattern_unknot, long long bound_companion) {
  if (bound_pattern_unknot < 0 || bound_companion < 0)
    throw std::invalid_argument("genus bounds must be nonnegative");
  return bound_pattern_unknot + bound_companion;
}

SeifertPair satellite_matrix(const SeifertPair& pattern, const IntMat& companion_block) {
  if (!companion_block.is_square() || companion_block.rows() % 2 != 0 ||
      !is_alexander_trivial_matrix(companion_block))
    throw std::invalid_argument("companion block not Alexander-one");
  return block_sum(pattern, SeifertPair(companion_block, 1));
}

long long band_move_bound(long long bound_before, long long moves_up, long long moves_down) {
  if (bound_before < 0 || moves_up < 0 || moves_down < 0)
    throw std::invalid_argument("band move counts must be nonnegative");
  return bound_before + moves_down;
}

}  // namespace algenus
