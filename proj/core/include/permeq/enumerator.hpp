#pragma once

#include "permeq/solution_set.hpp"

namespace permeq {

/// Hard size limits for the exhaustive solvers. Exceeding a guard raises
/// GuardError; results are never silently truncated. The CLI honors the
/// PERM_EQ_GUARDS environment variable to raise them explicitly.
struct Guards {
  unsigned naive_max = 9;   // n! candidates
  unsigned pruned_max = 14; // cycle-type restricted search
  unsigned roots_max = 12;  // square-root pairing enumeration
};

/// Tests every y in S_n against alpha o y o alpha^-1 = y^k. Exact and
/// complete; n is limited by guards.naive_max.
SolutionSet enumerate_naive(const Permutation& alpha, unsigned k,
                            const Guards& guards = {});

/// Complete solver for k = 2 that only generates candidates whose cycle type
/// survives the structural constraints: solutions have no even cycles, and
/// for every odd length r with t_r >= 1 the total t_r * r must be an
/// achievable sum of cycle lengths of alpha. Within a type, candidates are
/// generated by canonical placement (the smallest unplaced point starts each
/// cycle), so nothing is produced twice. Workers partition the type list;
/// output is canonically sorted and independent of the worker count.
SolutionSet enumerate_pruned(const Permutation& alpha, const Guards& guards = {},
                             unsigned workers = 1);

enum class Strategy { Auto, Naive, Pruned, Construct, Certify };

/// Solves alpha o y o alpha^-1 = y^k by the chosen strategy. Auto picks the
/// cheapest decisive route: a triviality certificate when it applies, the
/// constructed complete family when n = p*2^m, otherwise pruned enumeration
/// within guards.
SolutionSet solve_starstar(const Permutation& alpha, unsigned k, Strategy strategy,
                           const Guards& guards = {}, unsigned workers = 1);

/// Solves alpha o x = x o alpha o x o alpha through the substitution
/// x = y o alpha^-1 against the conjugate equation; every returned x is
/// re-verified against the original equation.
SolutionSet solve_star(const Permutation& alpha, Strategy strategy,
                       const Guards& guards = {}, unsigned workers = 1);

/// True iff sigma has a square root: the number of 2i-cycles is even for
/// every i >= 1.
bool square_root_exists(const Permutation& sigma);

/// All y with y o y = sigma, built constructively: each odd cycle either
/// stands alone (its unique odd root) or pairs with an equal-length cycle
/// into a doubled cycle; even cycles must be completely paired; every
/// interleaving of each pair is enumerated.
SolutionSet square_roots_all(const Permutation& sigma, const Guards& guards = {});

}  // namespace permeq
