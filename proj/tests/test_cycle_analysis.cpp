#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "permeq/constructor.hpp"
#include "permeq/cycle_analysis.hpp"

using namespace permeq;
using permeq::test::brute_d_range;
using permeq::test::cyc;
using permeq::test::random_permutation;

TEST_CASE("cycle_decomposition partitions the points") {
  const auto id_cycles = cycle_decomposition(Permutation::identity(4));
  REQUIRE(id_cycles.size() == 4);
  for (const Cycle& c : id_cycles) CHECK(c.length() == 1);

  const auto b4 = cycle_decomposition(cyc("(1,2,3,4,5,6)(7,8,9,10,11,12)", 12));
  REQUIRE(b4.size() == 2);
  CHECK(b4[0].length() == 6);
  CHECK(b4[1].length() == 6);
  CHECK(b4[0].min_point() == 1);
  CHECK(b4[1].min_point() == 7);

  std::mt19937 rng(8001);
  for (int i = 0; i < 200; ++i) {
    const Permutation p = random_permutation(9, rng);
    std::vector<bool> seen(10, false);
    unsigned total = 0;
    for (const Cycle& c : cycle_decomposition(p)) {
      CHECK(c.points.front() == *std::min_element(c.points.begin(), c.points.end()));
      for (Point x : c.points) {
        CHECK(!seen[x]);
        seen[x] = true;
      }
      total += c.length();
    }
    CHECK(total == 9);
  }
}

TEST_CASE("cycle_type") {
  const CycleType t6 = cycle_type(cyc("(1,2,3,4,5,6)", 6));
  CHECK(t6.counts[6] == 1);
  for (unsigned len = 1; len <= 5; ++len) CHECK(t6.counts[len] == 0);

  const CycleType ty = cycle_type(cyc("(1,3,5)(2,6,4)", 6));
  CHECK(ty.counts[3] == 2);
  CHECK(ty.counts[1] == 0);

  std::mt19937 rng(8002);
  for (int i = 0; i < 200; ++i) {
    const Permutation p = random_permutation(8, rng);
    const CycleType type = cycle_type(p);
    unsigned weighted = 0;
    for (unsigned len = 1; len <= 8; ++len) weighted += len * type.counts[len];
    CHECK(weighted == 8);
  }
}

TEST_CASE("same_type") {
  std::mt19937 rng(8003);
  for (int i = 0; i < 200; ++i) {
    const Permutation p = random_permutation(8, rng);
    const Permutation tau = random_permutation(8, rng);
    CHECK(same_type(p, conjugate(p, tau)));
  }
  CHECK_FALSE(same_type(Permutation::identity(4), cyc("(1,2)", 4)));
  CHECK(same_type(cyc("(1,2)(3,4)", 4), cyc("(1,3)(2,4)", 4)));
  CHECK_THROWS_AS(same_type(Permutation::identity(3), Permutation::identity(4)), Error);
}

TEST_CASE("d_range basics") {
  const Permutation c6 = cyc("(1,2,3,4,5,6)", 6);
  CHECK(d_range(c6, 1).members == std::vector<unsigned>{0, 6});

  const Permutation b4 = cyc("(1,2,3,4,5,6)(7,8,9,10,11,12)", 12);
  CHECK(d_range(b4, 1).members == std::vector<unsigned>{0, 6, 12});
  CHECK(d_range(b4, 4).members == std::vector<unsigned>{0});
  CHECK(d_range(b4, 2).members == std::vector<unsigned>{0, 6, 12});
  CHECK(d_range(b4, 6).members == std::vector<unsigned>{0, 6, 12});

  CHECK_THROWS_AS(d_range(c6, 0), Error);
  CHECK_THROWS_AS(d_range(c6, 7), Error);
}

TEST_CASE("d_range equals the exponential definition") {
  std::mt19937 rng(8004);
  int cases = 0;
  while (cases < 600) {
    const unsigned n = 1 + rng() % 12;
    const Permutation alpha = random_permutation(n, rng);
    for (unsigned d = 1; d <= n; ++d, ++cases) {
      const DRange range = d_range(alpha, d);
      const std::set<unsigned> expected = brute_d_range(alpha, d);
      CHECK(std::set<unsigned>(range.members.begin(), range.members.end()) == expected);
      CHECK(range.contains(0));
      for (unsigned v : range.members) CHECK(v % d == 0);
    }
  }
}

TEST_CASE("d_range downward consistency") {
  std::mt19937 rng(8005);
  for (int i = 0; i < 100; ++i) {
    const unsigned n = 2 + rng() % 11;
    const Permutation alpha = random_permutation(n, rng);
    for (unsigned d1 = 1; d1 <= n; ++d1) {
      for (unsigned d2 = d1; d2 <= n; d2 += d1) {
        const DRange r1 = d_range(alpha, d1);
        for (unsigned v : d_range(alpha, d2).members) CHECK(r1.contains(v));
      }
    }
  }
}

TEST_CASE("d_range_witness reproduces membership") {
  std::mt19937 rng(8006);
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 1 + rng() % 12;
    const Permutation alpha = random_permutation(n, rng);
    const unsigned d = 1 + rng() % n;
    for (unsigned target : d_range(alpha, d).members) {
      const auto witness = d_range_witness(alpha, d, target);
      unsigned sum = 0;
      for (unsigned len : witness) {
        CHECK(len % d == 0);
        sum += len;
      }
      CHECK(sum == target);
    }
    CHECK_THROWS_AS(d_range_witness(alpha, 1, n + 1), Error);
  }
}

TEST_CASE("fixed_set_decomposition") {
  const Permutation b4 = cyc("(1,2,3,4,5,6)(7,8,9,10,11,12)", 12);
  const auto cycles = fixed_set_decomposition(b4, {1, 2, 3, 4, 5, 6});
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].points == std::vector<Point>{1, 2, 3, 4, 5, 6});

  CHECK(fixed_set_decomposition(b4, {}).empty());

  CHECK_THROWS_AS(fixed_set_decomposition(cyc("(1,2)", 2), {1}), NotFixedSetError);
  try {
    fixed_set_decomposition(cyc("(1,2)", 2), {1});
  } catch (const NotFixedSetError& e) {
    CHECK(e.escaping_point == 1);
  }
}

TEST_CASE("unions of cycles land in the d-range") {
  std::mt19937 rng(8007);
  for (int i = 0; i < 500; ++i) {
    const unsigned n = 2 + rng() % 11;
    const Permutation alpha = random_permutation(n, rng);
    const auto cycles = cycle_decomposition(alpha);
    std::vector<Point> subset;
    std::vector<unsigned> chosen_lengths;
    for (const Cycle& c : cycles) {
      if (rng() % 2 == 0) continue;
      chosen_lengths.push_back(c.length());
      subset.insert(subset.end(), c.points.begin(), c.points.end());
    }
    const auto parts = fixed_set_decomposition(alpha, subset);
    CHECK(parts.size() == chosen_lengths.size());
    CHECK(d_range(alpha, 1).contains(static_cast<unsigned>(subset.size())));
    for (unsigned d = 1; d <= n; ++d) {
      const bool all_divisible = std::all_of(
          chosen_lengths.begin(), chosen_lengths.end(),
          [d](unsigned len) { return len % d == 0; });
      if (all_divisible)
        CHECK(d_range(alpha, d).contains(static_cast<unsigned>(subset.size())));
    }
  }
}

TEST_CASE("induced_index_permutation") {
  const Permutation alpha = cyc("(1,2,3,4,5,6)", 6);
  const Permutation y1 = cyc("(1,3,5)(2,6,4)", 6);
  const auto induced = induced_index_permutation(alpha, y1, 3);
  REQUIRE(induced.base_sets.size() == 2);
  CHECK(induced.base_sets[0] == std::vector<Point>{1, 3, 5});
  CHECK(induced.base_sets[1] == std::vector<Point>{2, 4, 6});
  CHECK(induced.gamma == cyc("(1,2)", 2));

  // A 12-cycle with a solution of type t_3 = 4: the induced permutation is a
  // single 4-cycle.
  const Permutation c12 = cyc("(1,2,3,4,5,6,7,8,9,10,11,12)", 12);
  const Permutation y = b2_solution(c12, 1, 1);
  const auto induced12 = induced_index_permutation(c12, y, 3);
  REQUIRE(induced12.base_sets.size() == 4);
  CHECK(cycle_type(induced12.gamma).counts[4] == 1);

  CHECK_THROWS_AS(induced_index_permutation(alpha, Permutation::identity(6), 3), Error);
  CHECK_THROWS_AS(induced_index_permutation(alpha, y1, 4), Error);
  CHECK_THROWS_AS(
      induced_index_permutation(cyc("(3,4)", 6), cyc("(1,2,3)(4,5,6)", 6), 3),
      NotInducedError);
}

TEST_CASE("induced base sets are mapped setwise by alpha") {
  const Permutation alpha = cyc("(1,4)(2,5)(3,6)", 6);
  const Permutation y = cyc("(1,2,3)(4,5,6)", 6);
  const auto induced = induced_index_permutation(alpha, y, 3);
  for (std::size_t i = 0; i < induced.base_sets.size(); ++i) {
    std::vector<Point> image;
    for (Point p : induced.base_sets[i]) image.push_back(alpha(p));
    std::sort(image.begin(), image.end());
    CHECK(image == induced.base_sets[induced.gamma(static_cast<Point>(i + 1)) - 1]);
  }
}
