// Search-based genus bounds: bounded enumeration of Alexander-trivial
// subgroups (upper bounds for the algebraic genus), bounded enumeration of
// isotropic subgroups (Taylor's lower-bound invariant), and the satellite /
// band-move bound combinators.
#pragma once

#include "algenus/intmat.hpp"
#include "algenus/seifert.hpp"

#include <optional>

namespace algenus {

enum class WitnessKind { alexander_trivial, isotropic };

// Columns generate the subgroup; kind records which defining equation the
// restriction satisfies.
struct SubgroupWitness {
  IntMat basis;  // n x 2k (or n x k for isotropic witnesses)
  WitnessKind kind = WitnessKind::alexander_trivial;
};

// Recomputes the witness's defining equation from scratch: column
// independence plus Alexander-triviality (resp. vanishing) of the
// restricted form.
bool verify_witness(const SeifertPair& s, const SubgroupWitness& w);

struct GenusBoundResult {
  int bound = 0;
  std::optional<SubgroupWitness> witness;
};

// Bounded search for Alexander-trivial subgroups: candidate columns have
// entries in [-coeff_bound, coeff_bound] and are enumerated in the shared
// coordinate order (0 < -1 < 1 < -2 < 2 < ...); ranks descend from
// n - r + 1. Returns genus(s) with no witness when nothing is found. The
// result is an upper bound for the algebraic genus, not the genus itself.
GenusBoundResult galg_upper_bound(const SeifertPair& s, int coeff_bound);

struct TaylorResult {
  int lower_rank = 0;    // certified rank of an isotropic subgroup
  bool exact = false;    // true when the maximal isotropic rank is pinned down
  int taylor_lo = 0;     // Taylor invariant bounds g - a(theta); equal when exact
  int taylor_hi = 0;
  std::optional<SubgroupWitness> witness;

  int taylor_value() const { return taylor_hi; }
};

// Bounded search for subgroups on which the Seifert form vanishes
// identically. Knots only (r = 1). exact is set when the search reaches the
// genus, when the symmetrized form is definite, or when the four-twist-region
// anisotropy certificate applies.
TaylorResult isotropic_rank(const SeifertPair& s, int coeff_bound);

// Bound for a satellite from bounds for the pattern (applied to the unknot)
// and the companion.
long long satellite_bound(long long bound_pattern_unknot, long long bound_companion);

// Block sum of a pattern Seifert matrix with an Alexander-trivial companion
// block; the Alexander polynomial is unchanged. Throws when the companion
// block is not Alexander-trivial.
SeifertPair satellite_matrix(const SeifertPair& pattern, const IntMat& companion_block);

// Band-move arithmetic: component-decreasing moves add at most one to the
// bound, component-increasing moves are free.
long long band_move_bound(long long bound_before, long long moves_up, long long moves_down);

}  // namespace algenus
