#include "permeq/constructor.hpp"

#include <algorithm>
#include <map>

#include "permeq/certifier.hpp"
#include "permeq/cycle_analysis.hpp"

namespace permeq {

namespace {

// Reduce v into {1,...,p} modulo p.
unsigned mod_into_one_based(unsigned long long v, unsigned p) {
  return static_cast<unsigned>((v - 1) % p) + 1;
}

void verify_starstar(const Permutation& alpha, const Permutation& y,
                     const std::string& what) {
  if (conjugate(y, alpha) != compose(y, y))
    throw VerificationError(what + ": " + format_cycles(y) +
                            " does not solve the conjugate equation for " +
                            format_cycles(alpha));
}

bool is_single_n_cycle(const Permutation& p) {
  const CycleType type = cycle_type(p);
  return p.degree() >= 1 && type.counts[p.degree()] == 1;
}

}  // namespace

B1Instance b1_construct(unsigned n, unsigned p) {
  if (p < 3 || !is_prime(p))
    throw Error("rejected: p = " + std::to_string(p) + " is not an odd prime");
  if (n < 3 || n % p != 0)
    throw Error("rejected: p = " + std::to_string(p) + " does not divide n = " +
                std::to_string(n));
  const unsigned q = n / p;
  if (!mersenne_divisible(p, q))
    throw Error("rejected: " + std::to_string(p) + " does not divide 2^" +
                std::to_string(q) + "-1");

  // Points are pairs (i, j), 1 <= i <= q, 1 <= j <= p, labeled (i-1)*p + j.
  const auto label = [p](unsigned i, unsigned j) { return (i - 1) * p + j; };

  std::vector<Point> beta_table(n + 1, 0);
  std::vector<Point> y_table(n + 1, 0);
  for (unsigned i = 1; i <= q; ++i) {
    for (unsigned j = 1; j <= p; ++j) {
      if (i < q)
        beta_table[label(i, j)] = label(i + 1, mod_into_one_based(2ull * j, p));
      else
        beta_table[label(i, j)] = label(1, mod_into_one_based(2ull * j + 1, p));
      y_table[label(i, j)] = label(i, mod_into_one_based(j + 1ull, p));
    }
  }

  B1Instance instance{n, p, q,
                      Permutation::from_table_unchecked(std::move(beta_table)),
                      Permutation::from_table_unchecked(std::move(y_table))};

  const CycleType beta_type = cycle_type(instance.beta);
  if (beta_type.counts[n] != 1)
    throw VerificationError("beta is not a single " + std::to_string(n) + "-cycle");
  const CycleType y_type = cycle_type(instance.y);
  if (y_type.counts[p] != q)
    throw VerificationError("y does not consist of " + std::to_string(q) +
                            " cycles of length " + std::to_string(p));
  verify_starstar(instance.beta, instance.y, "b1_construct");
  return instance;
}

std::optional<TransportWitness> conjugacy_transporter(const Permutation& source,
                                                      const Permutation& target) {
  if (source.degree() != target.degree())
    throw Error("degree mismatch between source and target");
  if (!same_type(source, target)) return std::nullopt;

  // Group cycles by length, keeping the canonical (by minimum) order.
  std::map<unsigned, std::vector<Cycle>> source_groups, target_groups;
  for (Cycle& c : cycle_decomposition(source))
    source_groups[c.length()].push_back(std::move(c));
  for (Cycle& c : cycle_decomposition(target))
    target_groups[c.length()].push_back(std::move(c));

  const unsigned n = source.degree();
  std::vector<Point> tau_table(n + 1, 0);
  std::vector<std::pair<Cycle, Cycle>> alignment;
  for (auto& [length, sources] : source_groups) {
    auto& targets = target_groups[length];
    for (std::size_t k = 0; k < sources.size(); ++k) {
      for (unsigned idx = 0; idx < length; ++idx)
        tau_table[sources[k].points[idx]] = targets[k].points[idx];
      alignment.emplace_back(std::move(sources[k]), std::move(targets[k]));
    }
  }
  std::sort(alignment.begin(), alignment.end(),
            [](const auto& a, const auto& b) {
              return a.first.min_point() < b.first.min_point();
            });

  TransportWitness witness{Permutation::from_table_unchecked(std::move(tau_table)),
                           std::move(alignment)};
  if (conjugate(source, witness.tau) != target)
    throw VerificationError("transporter fails to conjugate source onto target");
  return witness;
}

Permutation transport_solution(const Permutation& beta, const Permutation& y,
                               const Permutation& alpha) {
  const auto witness = conjugacy_transporter(beta, alpha);
  if (!witness)
    throw Error("beta and alpha are not of the same type; no transport exists");
  const Permutation z = conjugate(y, witness->tau);
  verify_starstar(alpha, z, "transport_solution");
  return z;
}

std::optional<B2Shape> b2_shape(unsigned n) {
  if (n < 3) return std::nullopt;
  unsigned m = 0;
  unsigned p = n;
  while (p % 2 == 0) {
    p /= 2;
    ++m;
  }
  const unsigned q = n / p;  // 2^m
  if (p < 3 || !is_prime(p) || !mersenne_divisible(p, q)) return std::nullopt;
  return B2Shape{p, m, q};
}

Permutation b2_solution(const Permutation& alpha, Point a, unsigned s) {
  const unsigned n = alpha.degree();
  const auto shape = b2_shape(n);
  if (!shape)
    throw Error("rejected: n = " + std::to_string(n) +
                " is not of the form p*2^m with p | 2^(2^m)-1");
  if (!is_single_n_cycle(alpha))
    throw Error("rejected: alpha is not a single " + std::to_string(n) + "-cycle");
  const unsigned p = shape->p;
  const unsigned q = shape->q;
  if (a < 1 || a > n) throw Error("anchor point out of range");
  if (s < 1 || s > p - 1)
    throw Error("rejected: s = " + std::to_string(s) + " must lie in 1.." +
                std::to_string(p - 1));

  // orbit[i] = alpha^i(a), i = 0..n-1
  std::vector<Point> orbit(n);
  orbit[0] = a;
  for (unsigned i = 1; i < n; ++i) orbit[i] = alpha(orbit[i - 1]);

  std::vector<Point> y_table(n + 1, 0);
  unsigned pow2 = 1;  // 2^i mod p
  for (unsigned i = 0; i < n; ++i) {
    const unsigned value = static_cast<unsigned>((static_cast<unsigned long long>(pow2) * s) % p);
    // multiplicative inverse in the prime field, representative in 1..p-1
    const unsigned sbar = static_cast<unsigned>(mod_pow(value, p - 2, p));
    const unsigned target_index = (sbar * q + i) % n;
    y_table[orbit[i]] = orbit[target_index];
    pow2 = (2 * pow2) % p;
  }

  const Permutation y = Permutation::from_table_unchecked(std::move(y_table));
  verify_starstar(alpha, y, "b2_solution");
  const CycleType type = cycle_type(y);
  if (type.counts[p] != q)
    throw VerificationError("b2_solution: expected " + std::to_string(q) +
                            " cycles of length " + std::to_string(p));
  return y;
}

SolutionSet b2_all_solutions(const Permutation& alpha) {
  const auto shape = b2_shape(alpha.degree());
  if (!shape)
    throw Error("rejected: n = " + std::to_string(alpha.degree()) +
                " is not of the form p*2^m with p | 2^(2^m)-1");
  SolutionSet set(EquationDescriptor::starstar(alpha, 2), SolveMethod::Constructed);
  set.insert(Permutation::identity(alpha.degree()));
  for (unsigned s = 1; s <= shape->p - 1; ++s)
    set.insert(b2_solution(alpha, 1, s));
  set.stats().candidates = shape->p;

  if (set.size() != shape->p)
    throw VerificationError("b2_all_solutions: expected exactly " +
                            std::to_string(shape->p) + " solutions");
  // The set must be the powers of any one non-trivial member.
  const Permutation& generator = set.solutions()[1];
  for (unsigned t = 0; t < shape->p; ++t)
    if (!set.contains(power(generator, t)))
      throw VerificationError("b2_all_solutions: set is not closed under powers");
  return set;
}

SolutionSet power_solutions(const Permutation& alpha, unsigned k) {
  if (k < 1) throw Error("exponent k must be >= 1");
  const unsigned long long ord = order(alpha);
  if (ord > 1000000)
    throw GuardError("order " + std::to_string(ord) +
                     " too large for power enumeration (limit 10^6)");
  SolutionSet set(EquationDescriptor::starstar(alpha, k), SolveMethod::Constructed,
                  /*complete=*/false);
  for (unsigned long long t = 0; t < ord; ++t)
    if ((t * (k - 1)) % ord == 0)
      set.insert(power(alpha, static_cast<long long>(t)));
  set.stats().candidates = ord;
  return set;
}

}  // namespace permeq
