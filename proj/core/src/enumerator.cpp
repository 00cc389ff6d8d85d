#include "permeq/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <thread>

#include "permeq/certifier.hpp"
#include "permeq/constructor.hpp"
#include "permeq/cycle_analysis.hpp"

namespace permeq {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// lcm(1..n); y^k = y^(k mod lcm(1..n)) for every y in S_n.
unsigned long long lcm_up_to(unsigned n) {
  unsigned long long l = 1;
  for (unsigned i = 2; i <= n; ++i) l = std::lcm(l, static_cast<unsigned long long>(i));
  return l;
}

// Composes image tables: out = p after q.
std::vector<Point> compose_tables(const std::vector<Point>& p,
                                  const std::vector<Point>& q) {
  std::vector<Point> out(p.size());
  out[0] = 0;
  for (std::size_t i = 1; i < p.size(); ++i) out[i] = p[q[i]];
  return out;
}

std::vector<Point> power_table(const std::vector<Point>& y, unsigned long long k) {
  std::vector<Point> result(y.size());
  std::iota(result.begin(), result.end(), 0u);
  std::vector<Point> base = y;
  while (k > 0) {
    if (k & 1) result = compose_tables(result, base);
    base = compose_tables(base, base);
    k >>= 1;
  }
  return result;
}

struct ConjugationTables {
  unsigned n;
  std::vector<Point> a;     // alpha
  std::vector<Point> ainv;  // alpha^-1

  explicit ConjugationTables(const Permutation& alpha)
      : n(alpha.degree()), a(alpha.table()), ainv(inverse(alpha).table()) {}

  // alpha o y o alpha^-1 == y o y, pointwise with early exit.
  bool solves_square(const std::vector<Point>& y) const {
    for (Point x = 1; x <= n; ++x)
      if (a[y[ainv[x]]] != y[y[x]]) return false;
    return true;
  }

  bool solves_power(const std::vector<Point>& y, const std::vector<Point>& yk) const {
    for (Point x = 1; x <= n; ++x)
      if (a[y[ainv[x]]] != yk[x]) return false;
    return true;
  }
};

}  // namespace

SolutionSet enumerate_naive(const Permutation& alpha, unsigned k, const Guards& guards) {
  const unsigned n = alpha.degree();
  if (n > guards.naive_max)
    throw GuardError("naive enumeration guard exceeded (n = " + std::to_string(n) +
                     " > " + std::to_string(guards.naive_max) +
                     "); use enumerate_pruned or raise the guard");
  if (k < 1) throw Error("exponent k must be >= 1");
  const auto start = Clock::now();

  const ConjugationTables tables(alpha);
  const unsigned long long k_eff = k % lcm_up_to(n);  // same power map for all y

  SolutionSet set(EquationDescriptor::starstar(alpha, k), SolveMethod::Naive);
  std::vector<Point> y(n + 1);
  std::iota(y.begin(), y.end(), 0u);
  unsigned long long candidates = 0;
  do {
    ++candidates;
    const bool solves = (k == 2)
                            ? tables.solves_square(y)
                            : tables.solves_power(y, power_table(y, k_eff));
    if (solves) set.insert(Permutation::from_table_unchecked(y));
  } while (std::next_permutation(y.begin() + 1, y.end()));

  set.stats().candidates = candidates;
  set.stats().elapsed_seconds = seconds_since(start);
  return set;
}

namespace {

// A candidate cycle type for a solution: pairs (length, count), lengths odd,
// sum length*count == n.
using OddType = std::vector<std::pair<unsigned, unsigned>>;

void collect_odd_types(unsigned n, unsigned max_len, const DRange& f1,
                       OddType& current, std::vector<OddType>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  unsigned len = std::min(max_len, n);
  if (len == 0) return;
  if (len % 2 == 0) --len;
  for (;; len -= 2) {
    for (unsigned count = n / len; count >= 1; --count) {
      if (!f1.contains(len * count)) continue;
      current.emplace_back(len, count);
      collect_odd_types(n - len * count, len - 1, f1, current, out);
      current.pop_back();
    }
    if (len == 1) break;
  }
}

// Exhaustively generates all permutations with the given odd cycle type by
// canonical placement: the smallest unplaced point always starts the next
// cycle, so each permutation of the type is produced exactly once.
struct TypeEnumerator {
  const ConjugationTables& tables;
  unsigned n;
  std::vector<Point> y;
  std::vector<bool> used;
  std::vector<std::pair<unsigned, unsigned>> quota;  // (length, remaining)
  std::vector<Point> cycle;
  unsigned long long candidates = 0;
  std::vector<Permutation> found;

  TypeEnumerator(const ConjugationTables& tables, const OddType& type)
      : tables(tables), n(tables.n), y(n + 1), used(n + 1, false),
        quota(type.begin(), type.end()) {
    std::iota(y.begin(), y.end(), 0u);
  }

  void run() { place_leader(1); }

  void place_leader(Point from) {
    Point leader = from;
    while (leader <= n && used[leader]) ++leader;
    if (leader > n) {
      ++candidates;
      if (tables.solves_square(y))
        found.push_back(Permutation::from_table_unchecked(y));
      return;
    }
    used[leader] = true;
    for (auto& [length, remaining] : quota) {
      if (remaining == 0) continue;
      --remaining;
      const std::size_t base = cycle.size();
      cycle.push_back(leader);
      extend_cycle(leader, length, base);
      cycle.pop_back();
      ++remaining;
    }
    used[leader] = false;
  }

  // cycle[base..] holds the cycle under construction, leader first.
  void extend_cycle(Point leader, unsigned length, std::size_t base) {
    if (cycle.size() - base == length) {
      for (std::size_t i = 0; i < length; ++i)
        y[cycle[base + i]] = cycle[base + (i + 1) % length];
      place_leader(leader + 1);
      for (std::size_t i = 0; i < length; ++i) y[cycle[base + i]] = cycle[base + i];
      return;
    }
    for (Point next = leader + 1; next <= n; ++next) {
      if (used[next]) continue;
      used[next] = true;
      cycle.push_back(next);
      extend_cycle(leader, length, base);
      cycle.pop_back();
      used[next] = false;
    }
  }
};

}  // namespace

SolutionSet enumerate_pruned(const Permutation& alpha, const Guards& guards,
                             unsigned workers) {
  const unsigned n = alpha.degree();
  if (n > guards.pruned_max)
    throw GuardError("pruned enumeration guard exceeded (n = " + std::to_string(n) +
                     " > " + std::to_string(guards.pruned_max) + ")");
  const auto start = Clock::now();

  const ConjugationTables tables(alpha);
  const DRange f1 = d_range(alpha, 1);
  std::vector<OddType> types;
  OddType current;
  collect_odd_types(n, n, f1, current, types);

  struct Slot {
    std::vector<Permutation> found;
    unsigned long long candidates = 0;
  };
  std::vector<Slot> slots(types.size());

  const unsigned thread_count =
      std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(types.size())));
  std::atomic<std::size_t> next_type{0};
  auto work = [&]() {
    for (std::size_t t = next_type.fetch_add(1); t < types.size();
         t = next_type.fetch_add(1)) {
      TypeEnumerator enumerator(tables, types[t]);
      enumerator.run();
      slots[t].found = std::move(enumerator.found);
      slots[t].candidates = enumerator.candidates;
    }
  };
  if (thread_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned i = 0; i < thread_count; ++i) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  SolutionSet set(EquationDescriptor::starstar(alpha, 2), SolveMethod::Pruned);
  unsigned long long candidates = 0;
  for (Slot& slot : slots) {
    candidates += slot.candidates;
    for (const Permutation& y : slot.found) set.insert(y);
  }
  set.stats().candidates = candidates;
  set.stats().elapsed_seconds = seconds_since(start);
  return set;
}

SolutionSet solve_starstar(const Permutation& alpha, unsigned k, Strategy strategy,
                           const Guards& guards, unsigned workers) {
  const unsigned n = alpha.degree();
  switch (strategy) {
    case Strategy::Naive:
      return enumerate_naive(alpha, k, guards);
    case Strategy::Pruned:
      if (k != 2) throw Error("pruned enumeration applies to k = 2 only");
      return enumerate_pruned(alpha, guards, workers);
    case Strategy::Construct:
      if (k == 2) return b2_all_solutions(alpha);
      return power_solutions(alpha, k);
    case Strategy::Certify: {
      if (k != 2) throw Error("certificates apply to k = 2 only");
      const Certificate cert = certify_a1(alpha);
      if (cert.verdict != Verdict::OnlyTrivial)
        throw Error("certificate is inconclusive for " + format_cycles(alpha) +
                     "; choose an enumeration strategy");
      SolutionSet set(EquationDescriptor::starstar(alpha, 2), SolveMethod::Certified);
      set.insert(Permutation::identity(n));
      return set;
    }
    case Strategy::Auto: {
      if (k == 2) {
        if (certify_a1(alpha).verdict == Verdict::OnlyTrivial) {
          SolutionSet set(EquationDescriptor::starstar(alpha, 2),
                          SolveMethod::Certified);
          set.insert(Permutation::identity(n));
          return set;
        }
        const CycleType type = cycle_type(alpha);
        if (b2_shape(n) && type.counts[n] == 1) return b2_all_solutions(alpha);
        if (n <= guards.pruned_max) return enumerate_pruned(alpha, guards, workers);
        throw GuardError("no decisive strategy for n = " + std::to_string(n) +
                         " within guards (pruned limit " +
                         std::to_string(guards.pruned_max) + ")");
      }
      if (n <= guards.naive_max) return enumerate_naive(alpha, k, guards);
      throw GuardError("naive enumeration guard exceeded for k = " +
                       std::to_string(k) + " (n = " + std::to_string(n) + ")");
    }
  }
  throw Error("unknown strategy");
}

SolutionSet solve_star(const Permutation& alpha, Strategy strategy,
                       const Guards& guards, unsigned workers) {
  const SolutionSet conjugate_set = solve_starstar(alpha, 2, strategy, guards, workers);
  const Permutation alpha_inv = inverse(alpha);
  SolutionSet set(EquationDescriptor::star(alpha), conjugate_set.method(),
                  conjugate_set.complete());
  for (const Permutation& y : conjugate_set.solutions())
    set.insert(compose(y, alpha_inv));
  set.stats() = conjugate_set.stats();
  return set;
}

bool square_root_exists(const Permutation& sigma) {
  const CycleType type = cycle_type(sigma);
  for (unsigned len = 2; len <= sigma.degree(); len += 2)
    if (type.counts[len] % 2 != 0) return false;
  return true;
}

namespace {

// Builds all square roots by pairing and interleaving cycles of sigma.
struct RootEnumerator {
  const Permutation& sigma;
  unsigned n;
  std::vector<std::vector<Cycle>> groups;  // cycles grouped by length
  std::vector<Point> y;
  unsigned long long candidates = 0;
  SolutionSet* out;

  RootEnumerator(const Permutation& sigma, SolutionSet* out)
      : sigma(sigma), n(sigma.degree()), y(n + 1), out(out) {
    std::iota(y.begin(), y.end(), 0u);
    std::map<unsigned, std::vector<Cycle>> by_length;
    for (Cycle& c : cycle_decomposition(sigma))
      by_length[c.length()].push_back(std::move(c));
    for (auto& [length, cycles] : by_length) groups.push_back(std::move(cycles));
  }

  void run() { descend(0); }

  void descend(std::size_t group_index) {
    if (group_index == groups.size()) {
      ++candidates;
      out->insert(Permutation::from_table_unchecked(y));
      return;
    }
    std::vector<bool> taken(groups[group_index].size(), false);
    match_group(group_index, taken);
  }

  void match_group(std::size_t group_index, std::vector<bool>& taken) {
    const std::vector<Cycle>& cycles = groups[group_index];
    std::size_t first = 0;
    while (first < cycles.size() && taken[first]) ++first;
    if (first == cycles.size()) {
      descend(group_index + 1);
      return;
    }
    const unsigned length = cycles[first].length();
    taken[first] = true;
    if (length % 2 == 1) {
      // The unique root of an odd cycle on its own support: advance by
      // (length+1)/2 along the cycle.
      assign_alone(cycles[first]);
      match_group(group_index, taken);
      unassign(cycles[first].points);
    }
    for (std::size_t other = first + 1; other < cycles.size(); ++other) {
      if (taken[other]) continue;
      taken[other] = true;
      for (unsigned offset = 0; offset < length; ++offset) {
        assign_pair(cycles[first], cycles[other], offset);
        match_group(group_index, taken);
        unassign(cycles[first].points);
        unassign(cycles[other].points);
      }
      taken[other] = false;
    }
    taken[first] = false;
  }

  void assign_alone(const Cycle& c) {
    const unsigned r = c.length();
    const unsigned step = (r + 1) / 2;
    for (unsigned i = 0; i < r; ++i) y[c.points[i]] = c.points[(i + step) % r];
  }

  // Interleave (a_0, b_off, a_1, b_off+1, ...): squares to both cycles.
  void assign_pair(const Cycle& a, const Cycle& b, unsigned offset) {
    const unsigned len = a.length();
    for (unsigned i = 0; i < len; ++i) {
      y[a.points[i]] = b.points[(offset + i) % len];
      y[b.points[(offset + i) % len]] = a.points[(i + 1) % len];
    }
  }

  void unassign(const std::vector<Point>& points) {
    for (Point p : points) y[p] = p;
  }
};

}  // namespace

SolutionSet square_roots_all(const Permutation& sigma, const Guards& guards) {
  const unsigned n = sigma.degree();
  if (n > guards.roots_max)
    throw GuardError("square-root enumeration guard exceeded (n = " +
                     std::to_string(n) + " > " + std::to_string(guards.roots_max) +
                     ")");
  const auto start = Clock::now();
  SolutionSet set(EquationDescriptor::square_root(sigma), SolveMethod::Constructed);
  if (square_root_exists(sigma)) {
    RootEnumerator enumerator(sigma, &set);
    enumerator.run();
    set.stats().candidates = enumerator.candidates;
  }
  set.stats().elapsed_seconds = seconds_since(start);
  return set;
}

}  // namespace permeq
