#pragma once

#include <vector>

#include "permeq/permutation.hpp"

namespace permeq {

/// Conjugacy-class invariant: counts[i] is the number of i-cycles, so
/// sum(i * counts[i]) == degree. counts[0] is unused.
struct CycleType {
  unsigned degree = 0;
  std::vector<unsigned> counts;

  bool operator==(const CycleType&) const = default;
};

/// All cycles of p, including fixed points as 1-cycles. Cycles are canonical
/// (minimum first) and sorted by their minimum point; together they
/// partition {1,...,n}.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

CycleType cycle_type(const Permutation& p);

/// True iff p and q are conjugate, i.e. have equal cycle types.
bool same_type(const Permutation& p, const Permutation& q);

/// The d-range of alpha: every sum obtainable by picking, for each cycle
/// length j divisible by d, between 0 and g_j cycles of that length.
/// Always contains 0 (the empty selection).
struct DRange {
  unsigned d = 1;
  std::vector<unsigned> members;  // sorted ascending

  bool contains(unsigned value) const;
};

/// Computed by subset-sum dynamic programming over the cycles of alpha whose
/// length is divisible by d. Requires 1 <= d <= n.
DRange d_range(const Permutation& alpha, unsigned d);

/// One multiset of cycle lengths of alpha, each divisible by d, summing to
/// target; sorted ascending. Throws Error when target is not in the d-range.
std::vector<unsigned> d_range_witness(const Permutation& alpha, unsigned d,
                                      unsigned target);

/// If alpha(H) is contained in H, H is a union of whole cycles of alpha;
/// returns those cycles. Throws NotFixedSetError naming an escaping point
/// otherwise.
std::vector<Cycle> fixed_set_decomposition(const Permutation& alpha,
                                           const std::vector<Point>& fixed_set);

/// The permutation gamma of the index set {1,...,t_r} induced by alpha on
/// the base sets of the r-cycles of y: alpha maps base_sets[i-1] onto
/// base_sets[gamma(i)-1]. Base sets are listed sorted by minimum element.
struct InducedPermutation {
  unsigned r = 0;
  std::vector<std::vector<Point>> base_sets;  // each sorted ascending
  Permutation gamma;
};

/// Requires r odd and y to have at least one r-cycle. Throws NotInducedError
/// when alpha fails to map some base set onto another base set (y is then
/// not a solution of the conjugate equation for alpha).
InducedPermutation induced_index_permutation(const Permutation& alpha,
                                             const Permutation& y, unsigned r);

}  // namespace permeq
