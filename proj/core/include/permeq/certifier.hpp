#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "permeq/cycle_analysis.hpp"

namespace permeq {

/// Deterministic trial division; intended for the small values that appear
/// as cycle lengths and degrees (up to a few million).
bool is_prime(unsigned long long value);

unsigned long long mod_pow(unsigned long long base, unsigned long long exp,
                           unsigned long long mod);

/// True iff p divides 2^e - 1, decided by modular exponentiation; 2^e is
/// never materialized. Requires p to be an odd prime.
bool mersenne_divisible(unsigned p, unsigned long long e);

/// gcd(2^d - 1, r) computed through (2^d - 1) mod r.
unsigned gcd_mersenne(unsigned d, unsigned r);

enum class Verdict { OnlyTrivial, Inconclusive };
enum class Theorem { A1, A2, A3 };

/// One checked (d, r) hypothesis pair: d*r lies in the d-range of alpha,
/// witnessed by a multiset of cycle lengths, and the pair passes iff
/// g_d == 0 and gcd(2^d - 1, r) == 1.
struct PairRecord {
  unsigned d = 0;
  unsigned r = 0;
  unsigned g_d = 0;
  unsigned gcd_value = 0;
  std::vector<unsigned> witness;  // cycle lengths summing to d*r, each divisible by d
  bool ok = false;
};

struct PrimeCheck {
  unsigned p = 0;             // odd prime divisor of cycle_length
  unsigned long long e = 0;   // exponent cycle_length / p
  bool divides = false;       // p | 2^e - 1 (a violation when true)
  unsigned cycle_length = 0;
};

/// Machine-checkable verdict. OnlyTrivial asserts that the conjugate
/// equation for alpha has y = 1 as its only solution; Inconclusive asserts
/// nothing. replay() re-derives the verdict from the recorded data alone.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  Theorem theorem = Theorem::A1;
  unsigned degree = 0;
  std::vector<unsigned> alpha_lengths;  // cycle lengths of alpha, descending
  std::vector<PairRecord> pairs;        // exhaustive, ordered by (d, r); A1 only
  std::vector<PrimeCheck> prime_checks; // A2 / A3 only
  bool vacuous = false;                 // OnlyTrivial with nothing to check
  std::optional<std::string> failure;   // first violated hypothesis
  std::optional<std::pair<unsigned, unsigned>> failure_pair;  // (d, r), A1 only
};

/// Checks, for every pair (d, r) with r odd >= 3, d >= 1, d*r <= n and
/// d*r in the d-range of alpha, that g_d == 0 and gcd(2^d - 1, r) == 1.
/// All pairs are recorded so the certificate can be replayed externally.
Certificate certify_a1(const Permutation& alpha);

/// Hypotheses: no fixed points, distinct cycle lengths pairwise coprime,
/// every multiplicity at most 2, and no odd prime p dividing a present
/// length a with p | 2^(a/p) - 1.
Certificate certify_a2(const Permutation& alpha);

/// Specialization for the n-cycle: only the per-prime divisibility checks
/// remain. Vacuously OnlyTrivial when n has no odd prime divisor.
Certificate certify_a3_cyclic(unsigned n);

/// Re-evaluates every recorded check of the certificate and returns the
/// verdict it implies. Throws VerificationError if the recorded data is
/// internally inconsistent (e.g. a witness that does not sum to d*r).
Verdict replay(const Certificate& certificate);

}  // namespace permeq
