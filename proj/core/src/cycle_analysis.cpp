#include "permeq/cycle_analysis.hpp"

#include <algorithm>
#include <map>

namespace permeq {

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  const unsigned n = p.degree();
  std::vector<Cycle> cycles;
  std::vector<bool> visited(n + 1, false);
  for (unsigned start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<Point> points;
    for (Point x = start; !visited[x]; x = p(x)) {
      visited[x] = true;
      points.push_back(x);
    }
    cycles.push_back(Cycle{std::move(points)});  // starts at the minimum
  }
  return cycles;
}

CycleType cycle_type(const Permutation& p) {
  CycleType type;
  type.degree = p.degree();
  type.counts.assign(p.degree() + 1, 0);
  for (const Cycle& c : cycle_decomposition(p)) ++type.counts[c.length()];
  return type;
}

bool same_type(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error("degree mismatch: cannot compare types of degree " +
                std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  return cycle_type(p) == cycle_type(q);
}

bool DRange::contains(unsigned value) const {
  return std::binary_search(members.begin(), members.end(), value);
}

namespace {

std::vector<unsigned> divisible_cycle_lengths(const Permutation& alpha, unsigned d) {
  std::vector<unsigned> lengths;
  for (const Cycle& c : cycle_decomposition(alpha))
    if (c.length() % d == 0) lengths.push_back(c.length());
  return lengths;
}

void check_d(const Permutation& alpha, unsigned d) {
  if (d < 1 || d > alpha.degree())
    throw Error("d = " + std::to_string(d) + " out of range 1.." +
                std::to_string(alpha.degree()));
}

}  // namespace

DRange d_range(const Permutation& alpha, unsigned d) {
  check_d(alpha, d);
  const unsigned n = alpha.degree();
  std::vector<bool> reachable(n + 1, false);
  reachable[0] = true;
  for (unsigned len : divisible_cycle_lengths(alpha, d))
    for (unsigned s = n - len + 1; s-- > 0;)
      if (reachable[s]) reachable[s + len] = true;
  DRange range;
  range.d = d;
  for (unsigned s = 0; s <= n; ++s)
    if (reachable[s]) range.members.push_back(s);
  return range;
}

std::vector<unsigned> d_range_witness(const Permutation& alpha, unsigned d,
                                      unsigned target) {
  check_d(alpha, d);
  const unsigned n = alpha.degree();
  if (target > n) throw Error("witness target exceeds degree");
  const std::vector<unsigned> lengths = divisible_cycle_lengths(alpha, d);
  // used_item[s] = index of the cycle whose length completed sum s first.
  std::vector<int> used_item(n + 1, -1);
  std::vector<bool> reachable(n + 1, false);
  reachable[0] = true;
  for (std::size_t item = 0; item < lengths.size(); ++item) {
    const unsigned len = lengths[item];
    for (unsigned s = n - len + 1; s-- > 0;) {
      if (reachable[s] && !reachable[s + len]) {
        reachable[s + len] = true;
        used_item[s + len] = static_cast<int>(item);
      }
    }
  }
  if (!reachable[target])
    throw Error(std::to_string(target) + " is not in the " + std::to_string(d) +
                "-range");
  std::vector<unsigned> witness;
  for (unsigned s = target; s != 0; s -= lengths[used_item[s]])
    witness.push_back(lengths[used_item[s]]);
  std::sort(witness.begin(), witness.end());
  return witness;
}

std::vector<Cycle> fixed_set_decomposition(const Permutation& alpha,
                                           const std::vector<Point>& fixed_set) {
  const unsigned n = alpha.degree();
  std::vector<bool> in_set(n + 1, false);
  for (Point p : fixed_set) {
    if (p < 1 || p > n)
      throw Error("point " + std::to_string(p) + " out of range 1.." +
                  std::to_string(n));
    in_set[p] = true;
  }
  for (unsigned p = 1; p <= n; ++p)
    if (in_set[p] && !in_set[alpha(p)])
      throw NotFixedSetError("alpha maps " + std::to_string(p) + " to " +
                                 std::to_string(alpha(p)) + ", which leaves the set",
                             p);
  std::vector<Cycle> cycles;
  unsigned covered = 0;
  for (Cycle& c : cycle_decomposition(alpha)) {
    if (in_set[c.min_point()]) {
      covered += c.length();
      cycles.push_back(std::move(c));
    }
  }
  const unsigned size = static_cast<unsigned>(
      std::count(in_set.begin(), in_set.end(), true));
  if (covered != size || !d_range(alpha, 1).contains(size))
    throw VerificationError("invariant subset is not a union of cycles");
  return cycles;
}

InducedPermutation induced_index_permutation(const Permutation& alpha,
                                             const Permutation& y, unsigned r) {
  if (alpha.degree() != y.degree())
    throw Error("degree mismatch between alpha and y");
  if (r % 2 == 0 || r < 1)
    throw Error("r = " + std::to_string(r) + " must be an odd cycle length");

  std::vector<std::vector<Point>> base_sets;
  for (const Cycle& c : cycle_decomposition(y)) {
    if (c.length() != r) continue;
    std::vector<Point> set = c.points;
    std::sort(set.begin(), set.end());
    base_sets.push_back(std::move(set));
  }
  if (base_sets.empty())
    throw Error("y has no cycle of length " + std::to_string(r));
  // Decomposition order is by minimum point, which is the canonical order.

  std::vector<Point> gamma_table(base_sets.size() + 1, 0);
  for (std::size_t i = 0; i < base_sets.size(); ++i) {
    std::vector<Point> image;
    image.reserve(r);
    for (Point p : base_sets[i]) image.push_back(alpha(p));
    std::sort(image.begin(), image.end());
    const auto it = std::find(base_sets.begin(), base_sets.end(), image);
    if (it == base_sets.end())
      throw NotInducedError("alpha does not map the base set with minimum " +
                            std::to_string(base_sets[i].front()) +
                            " onto another base set");
    gamma_table[i + 1] = static_cast<Point>(it - base_sets.begin()) + 1;
  }

  InducedPermutation induced{r, std::move(base_sets),
                             Permutation::from_images(std::vector<Point>(
                                 gamma_table.begin() + 1, gamma_table.end()))};
  return induced;
}

}  // namespace permeq
