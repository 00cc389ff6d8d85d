#pragma once

#include <cassert>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "permeq/errors.hpp"

namespace permeq {

/// Points are 1-based everywhere: external formats, the public API and the
/// internal image table all speak the same 1..n language. Slot 0 of the
/// table is a dummy and always holds 0.
using Point = unsigned;

/// A bijection of {1,...,n}, stored as a dense image table. Immutable after
/// construction; all operations are pure, so values are safe to share
/// between threads.
class Permutation {
 public:
  /// The identity on {1,...,degree}. degree >= 1.
  explicit Permutation(unsigned degree);

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  /// One-line notation: images[i] is the image of point i+1. Validates that
  /// the table is a bijection of {1,...,n} and throws Error otherwise.
  static Permutation from_images(const std::vector<Point>& images);

  /// Trusted construction from a full table (index 0 is the dummy slot).
  /// Callers must guarantee bijectivity; debug builds assert it.
  static Permutation from_table_unchecked(std::vector<Point> table);

  unsigned degree() const { return degree_; }

  /// Image of a point, 1 <= x <= degree().
  Point operator()(Point x) const {
    assert(x >= 1 && x <= degree_);
    return table_[x];
  }

  bool is_identity() const;

  /// Full image table, size degree()+1, slot 0 unused.
  const std::vector<Point>& table() const { return table_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  Permutation(std::vector<Point> table, int /*unchecked tag*/);

  unsigned degree_;
  std::vector<Point> table_;
};

/// compose(p, q)(x) = p(q(x)); composition applies right to left.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

Permutation inverse(const Permutation& p);

/// p^k for any integer k; power(p, -k) == power(inverse(p), k), p^0 = 1.
Permutation power(const Permutation& p, long long k);

/// tau o p o tau^-1.
Permutation conjugate(const Permutation& p, const Permutation& tau);

/// Least m >= 1 with p^m = 1; the lcm of the cycle lengths.
unsigned long long order(const Permutation& p);

/// One cycle of a permutation, in canonical form: rotated so the minimum
/// point comes first. Fixed points are length-1 cycles.
struct Cycle {
  std::vector<Point> points;

  unsigned length() const { return static_cast<unsigned>(points.size()); }
  Point min_point() const { return points.front(); }

  /// Rotates an arbitrary nonempty point sequence into canonical form.
  static Cycle canonical(std::vector<Point> points);

  bool operator==(const Cycle&) const = default;
};

/// Parses whitespace-tolerant cycle notation over {1,...,degree}, e.g.
/// "(1,2,3)(4,5)". Unlisted points are fixed; "()" is the identity.
/// Throws ParseError naming the offending token on duplicate points,
/// out-of-range points or malformed syntax.
Permutation parse_cycles(std::string_view text, unsigned degree);

/// Canonical cycle notation: each cycle minimum-first, cycles sorted by
/// minimum, fixed points omitted, identity printed as "()". Round-trip
/// stable: parse_cycles(format_cycles(p), p.degree()) == p.
std::string format_cycles(const Permutation& p);

/// Largest point mentioned in cycle-notation text (0 when none); used to
/// infer the degree before parsing.
unsigned inferred_degree(std::string_view text);

}  // namespace permeq
