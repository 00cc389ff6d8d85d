#pragma once

// Shared test utilities and independent oracles. Oracles here deliberately
// avoid the code paths they validate: brute force goes through
// std::next_permutation and the checked group operations, never through the
// enumerator's search internals.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "permeq/cycle_analysis.hpp"
#include "permeq/permutation.hpp"
#include "permeq/solution_set.hpp"

namespace permeq::test {

inline Permutation cyc(std::string_view text, unsigned degree) {
  return parse_cycles(text, degree);
}

/// Calls fn with every permutation of S_n (as a Permutation).
template <typename Fn>
void for_all_permutations(unsigned n, Fn&& fn) {
  std::vector<Point> table(n + 1);
  std::iota(table.begin(), table.end(), 0u);
  do {
    fn(Permutation::from_table_unchecked(table));
  } while (std::next_permutation(table.begin() + 1, table.end()));
}

inline Permutation random_permutation(unsigned n, std::mt19937& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

/// Brute-force solution set of alpha o y o alpha^-1 = y^k over all of S_n.
inline std::set<Permutation> brute_starstar(const Permutation& alpha, unsigned k) {
  std::set<Permutation> out;
  for_all_permutations(alpha.degree(), [&](const Permutation& y) {
    if (conjugate(y, alpha) == power(y, k)) out.insert(y);
  });
  return out;
}

/// Brute-force solution set of alpha o x = x o alpha o x o alpha.
inline std::set<Permutation> brute_star(const Permutation& alpha) {
  std::set<Permutation> out;
  for_all_permutations(alpha.degree(), [&](const Permutation& x) {
    if (compose(alpha, x) == compose(x, compose(alpha, compose(x, alpha))))
      out.insert(x);
  });
  return out;
}

/// Brute-force square roots: all y with y o y = sigma.
inline std::set<Permutation> brute_square_roots(const Permutation& sigma) {
  std::set<Permutation> out;
  for_all_permutations(sigma.degree(), [&](const Permutation& y) {
    if (compose(y, y) == sigma) out.insert(y);
  });
  return out;
}

/// d-range by the exponential definition: every sum over selections
/// 0 <= q_j <= g_j of cycle lengths j divisible by d.
inline std::set<unsigned> brute_d_range(const Permutation& alpha, unsigned d) {
  std::vector<unsigned> lengths;
  for (const Cycle& c : cycle_decomposition(alpha))
    if (c.length() % d == 0) lengths.push_back(c.length());
  std::set<unsigned> sums{0};
  for (unsigned len : lengths) {
    std::set<unsigned> next = sums;
    for (unsigned s : sums) next.insert(s + len);
    sums = std::move(next);
  }
  return sums;
}

/// Partition generation independent of the survey module.
inline void partitions_ref_into(unsigned remaining, unsigned max_part,
                                std::vector<unsigned>& current,
                                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(max_part, remaining); part >= 1; --part) {
    current.push_back(part);
    partitions_ref_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

inline std::vector<std::vector<unsigned>> partitions_ref(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  partitions_ref_into(n, n, current, out);
  return out;
}

/// Representative of a cycle type, independent of the survey module.
inline Permutation representative_ref(const std::vector<unsigned>& parts) {
  unsigned n = 0;
  for (unsigned part : parts) n += part;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 1u);
  unsigned start = 0;
  for (unsigned part : parts) {
    for (unsigned i = 0; i < part; ++i) images[start + i] = start + 1 + (i + 1) % part;
    start += part;
  }
  return Permutation::from_images(images);
}

inline std::set<Permutation> as_set(const SolutionSet& set) {
  return {set.solutions().begin(), set.solutions().end()};
}

/// Number of permutations of S_n with the given cycle type, by the standard
/// counting formula n! / prod(len^count * count!).
inline unsigned long long type_class_size(
    unsigned n, const std::vector<std::pair<unsigned, unsigned>>& type) {
  unsigned long long count = 1;
  for (unsigned i = 2; i <= n; ++i) count *= i;
  for (const auto& [len, mult] : type) {
    for (unsigned i = 0; i < mult; ++i) count /= len;
    for (unsigned i = 2; i <= mult; ++i) count /= i;
  }
  return count;
}

}  // namespace permeq::test
