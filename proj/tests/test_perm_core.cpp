#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "helpers.hpp"
#include "permeq/cycle_analysis.hpp"
#include "permeq/permutation.hpp"

using namespace permeq;
using permeq::test::cyc;
using permeq::test::random_permutation;

TEST_CASE("compose applies right to left") {
  const Permutation c6 = cyc("(1,2,3,4,5,6)", 6);
  CHECK(compose(Permutation::identity(6), c6) == c6);
  CHECK(compose(c6, Permutation::identity(6)) == c6);

  const Permutation y1 = cyc("(1,3,5)(2,6,4)", 6);
  CHECK(compose(y1, y1) == cyc("(1,5,3)(2,4,6)", 6));

  CHECK(compose(cyc("(1,2)", 2), cyc("(1,2)", 2)) == Permutation::identity(2));

  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), Error);
}

TEST_CASE("inverse") {
  CHECK(inverse(cyc("(1,2,3)", 3)) == cyc("(1,3,2)", 3));
  CHECK(inverse(Permutation::identity(7)) == Permutation::identity(7));
  CHECK(inverse(cyc("(1,3,5)(2,6,4)", 6)) == cyc("(1,5,3)(2,4,6)", 6));

  std::mt19937 rng(7001);
  for (int i = 0; i < 200; ++i) {
    const Permutation p = random_permutation(8, rng);
    CHECK(compose(p, inverse(p)) == Permutation::identity(8));
    CHECK(compose(inverse(p), p) == Permutation::identity(8));
  }
}

TEST_CASE("power") {
  const Permutation c6 = cyc("(1,2,3,4,5,6)", 6);
  CHECK(power(c6, 6) == Permutation::identity(6));
  CHECK(power(cyc("(1,3,5)(2,6,4)", 6), 3) == Permutation::identity(6));
  CHECK(power(cyc("(1,2,3)", 3), -1) == cyc("(1,3,2)", 3));
  CHECK(power(c6, 0) == Permutation::identity(6));
  CHECK(power(c6, -5) == c6);

  std::mt19937 rng(7002);
  for (int i = 0; i < 100; ++i) {
    const Permutation p = random_permutation(7, rng);
    const long long k = static_cast<long long>(rng() % 40) - 20;
    CHECK(power(p, -k) == power(inverse(p), k));
  }
}

TEST_CASE("conjugate") {
  const Permutation p = cyc("(1,2,3)", 3);
  CHECK(conjugate(p, Permutation::identity(3)) == p);
  CHECK(conjugate(p, cyc("(1,2)", 3)) == cyc("(1,3,2)", 3));

  std::mt19937 rng(7003);
  for (int i = 0; i < 300; ++i) {
    const Permutation a = random_permutation(8, rng);
    const Permutation tau = random_permutation(8, rng);
    CHECK(cycle_type(conjugate(a, tau)) == cycle_type(a));
    CHECK(conjugate(a, tau) == compose(tau, compose(a, inverse(tau))));
  }
}

TEST_CASE("order") {
  CHECK(order(Permutation::identity(9)) == 1);
  CHECK(order(cyc("(1,2,3,4,5,6)", 6)) == 6);
  CHECK(order(cyc("(1,2)(3,4,5)", 5)) == 6);

  std::mt19937 rng(7004);
  for (int i = 0; i < 100; ++i) {
    const Permutation p = random_permutation(8, rng);
    const auto m = order(p);
    CHECK(power(p, static_cast<long long>(m)) == Permutation::identity(8));
    for (unsigned long long d = 1; d < m; ++d)
      if (m % d == 0) CHECK(power(p, static_cast<long long>(d)) != Permutation::identity(8));
  }
}

TEST_CASE("group laws hold on random triples") {
  std::mt19937 rng(7005);
  for (int i = 0; i < 1000; ++i) {
    const Permutation a = random_permutation(8, rng);
    const Permutation b = random_permutation(8, rng);
    const Permutation c = random_permutation(8, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, Permutation::identity(8)) == a);
    CHECK(compose(Permutation::identity(8), a) == a);
  }
}

TEST_CASE("conjugation maps cycles pointwise") {
  // If (c1,...,cr) is a cycle of y and z = a o y o a^-1, then
  // (a(c1),...,a(cr)) is a cycle of z.
  std::mt19937 rng(7006);
  for (int i = 0; i < 500; ++i) {
    const Permutation y = random_permutation(8, rng);
    const Permutation a = random_permutation(8, rng);
    const Permutation z = conjugate(y, a);
    for (const Cycle& c : cycle_decomposition(y)) {
      const unsigned r = c.length();
      for (unsigned idx = 0; idx < r; ++idx)
        CHECK(z(a(c.points[idx])) == a(c.points[(idx + 1) % r]));
    }
  }
}

TEST_CASE("operations preserve bijectivity") {
  std::mt19937 rng(7007);
  auto check_bijection = [](const Permutation& p) {
    std::set<Point> seen;
    for (Point x = 1; x <= p.degree(); ++x) seen.insert(p(x));
    CHECK(seen.size() == p.degree());
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == p.degree());
  };
  for (int i = 0; i < 200; ++i) {
    const Permutation a = random_permutation(9, rng);
    const Permutation b = random_permutation(9, rng);
    check_bijection(compose(a, b));
    check_bijection(inverse(a));
    check_bijection(power(a, 5));
    check_bijection(conjugate(a, b));
  }
}

TEST_CASE("parse_cycles") {
  CHECK(cyc("(1,2,3,4,5,6)", 6) ==
        Permutation::from_images({2, 3, 4, 5, 6, 1}));
  CHECK(cyc("()", 4) == Permutation::identity(4));
  CHECK(cyc(" ( 1 , 2 ) ( 3 ) ", 4) == Permutation::from_images({2, 1, 3, 4}));
  CHECK(cyc("(2,6,4)(1,3,5)", 6) == cyc("(1,3,5)(2,6,4)", 6));

  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,7)", 6), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("1,2)", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,,2)", 4), ParseError);

  // errors name the offending token
  try {
    parse_cycles("(1,2)(2,3)", 4);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("duplicate point 2") != std::string::npos);
  }
  try {
    parse_cycles("(1,9)", 6);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("point 9 out of range") != std::string::npos);
  }
}

TEST_CASE("format_cycles canonicalizes") {
  CHECK(format_cycles(cyc("(2,6,4)(1,3,5)", 6)) == "(1,3,5)(2,6,4)");
  CHECK(format_cycles(Permutation::identity(5)) == "()");
  CHECK(format_cycles(cyc("(3,1,2)", 5)) == "(1,2,3)");  // fixed points omitted

  std::mt19937 rng(7008);
  for (int i = 0; i < 500; ++i) {
    const unsigned n = 1 + rng() % 10;
    const Permutation p = random_permutation(n, rng);
    CHECK(parse_cycles(format_cycles(p), n) == p);
  }
}

TEST_CASE("inferred_degree") {
  CHECK(inferred_degree("(1,2,3)(4,5)") == 5);
  CHECK(inferred_degree("(12)") == 12);
  CHECK(inferred_degree("()") == 0);
}

TEST_CASE("degree is explicit and never implicit") {
  CHECK_THROWS_AS(Permutation::identity(0), Error);
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), Error);
  CHECK_THROWS_AS(Permutation::from_images({2, 3}), Error);
  CHECK_THROWS_AS(conjugate(Permutation::identity(3), Permutation::identity(4)), Error);
}
