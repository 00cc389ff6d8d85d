#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "permeq/solution_set.hpp"

namespace permeq {

/// Explicit witness that the conjugate equation for a single n-cycle has a
/// non-trivial solution when some odd prime p | n satisfies p | 2^(n/p)-1.
/// beta is a single n-cycle, y consists of q = n/p disjoint p-cycles, and
/// beta o y = y^2 o beta holds exactly (verified on construction).
struct B1Instance {
  unsigned n = 0;
  unsigned p = 0;
  unsigned q = 0;      // n / p
  Permutation beta;    // single n-cycle
  Permutation y;       // q cycles of length p
};

/// Builds the pair-set construction with the fixed labeling
/// (i, j) -> (i-1)*p + j, 1 <= i <= q, 1 <= j <= p. Preconditions: p >= 3
/// prime, p | n, p | 2^(n/p) - 1; violations are rejected naming the failed
/// condition. Both structural invariants and the equation are verified
/// before returning.
B1Instance b1_construct(unsigned n, unsigned p);

/// A permutation tau with tau o source o tau^-1 = target, together with the
/// cycle alignment that produced it.
struct TransportWitness {
  Permutation tau;
  std::vector<std::pair<Cycle, Cycle>> alignment;  // (source cycle, target cycle)
};

/// Canonical transporter: the k-th source cycle of each length maps to the
/// k-th target cycle of that length, minimum element to minimum element.
/// Returns nullopt when the types differ (no transporter exists).
std::optional<TransportWitness> conjugacy_transporter(const Permutation& source,
                                                      const Permutation& target);

/// Carries a solution y of the conjugate equation for beta to the conjugate
/// equation for alpha: z = tau o y o tau^-1 with tau o beta o tau^-1 = alpha.
/// Throws Error on type mismatch and VerificationError if z fails to solve
/// (which would mean y was not a solution for beta, or an internal bug).
Permutation transport_solution(const Permutation& beta, const Permutation& y,
                               const Permutation& alpha);

/// Decomposition n = p * 2^m with p an odd prime dividing 2^(2^m) - 1;
/// the shape in which the complete solution family is known.
struct B2Shape {
  unsigned p = 0;
  unsigned m = 0;
  unsigned q = 0;  // 2^m
};

std::optional<B2Shape> b2_shape(unsigned n);

/// The solution anchored at point a with parameter 1 <= s <= p-1:
/// y(alpha^i(a)) = alpha^(sbar(i)*q + i)(a) where sbar(i) inverts 2^i * s in
/// the prime field of size p (representatives taken in 1..p-1). Requires
/// alpha to be a single n-cycle with n = p * 2^m as in b2_shape. The result
/// is verified to solve the equation and to consist of 2^m p-cycles.
Permutation b2_solution(const Permutation& alpha, Point a, unsigned s);

/// The complete solution set {1} U {b2_solution(alpha, 1, s) : 1 <= s <= p-1};
/// the p solutions form the cyclic group generated by any non-trivial member
/// (asserted before returning).
SolutionSet b2_all_solutions(const Permutation& alpha);

/// All power solutions alpha^t of alpha o y o alpha^-1 = y^k: those t in
/// 0..ord(alpha)-1 with ord(alpha) | t*(k-1). Non-trivial members exist iff
/// gcd(k-1, ord(alpha)) != 1. This is a verified family, not a completeness
/// claim.
SolutionSet power_solutions(const Permutation& alpha, unsigned k);

}  // namespace permeq
