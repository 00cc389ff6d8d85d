#pragma once

#include <string>
#include <vector>

#include "permeq/permutation.hpp"

namespace permeq {

enum class EquationKind {
  StarStar,    // alpha o y o alpha^-1 = y^k
  Star,        // alpha o x = x o alpha o x o alpha
  SquareRoot,  // y o y = sigma
};

struct EquationDescriptor {
  EquationKind kind = EquationKind::StarStar;
  Permutation base;  // alpha for Star/StarStar, sigma for SquareRoot
  unsigned k = 2;    // exponent, StarStar only

  static EquationDescriptor starstar(Permutation alpha, unsigned k = 2);
  static EquationDescriptor star(Permutation alpha);
  static EquationDescriptor square_root(Permutation sigma);

  bool satisfied_by(const Permutation& candidate) const;
  std::string to_string() const;
};

enum class SolveMethod { Naive, Pruned, Constructed, Certified };

std::string to_string(SolveMethod method);

struct SearchStats {
  unsigned long long candidates = 0;  // candidates examined
  double elapsed_seconds = 0.0;       // in-memory only, never serialized
};

/// A deduplicated, canonically ordered (lexicographic by image table)
/// collection of solutions. Every member is verified against the defining
/// equation at insertion; a failed verification throws VerificationError.
class SolutionSet {
 public:
  SolutionSet(EquationDescriptor equation, SolveMethod method, bool complete = true);

  void insert(const Permutation& candidate);

  const EquationDescriptor& equation() const { return equation_; }
  SolveMethod method() const { return method_; }

  /// False when the set is a family of known solutions without a
  /// completeness claim (e.g. power solutions for k >= 3).
  bool complete() const { return complete_; }

  const std::vector<Permutation>& solutions() const { return solutions_; }
  std::size_t size() const { return solutions_.size(); }
  bool contains(const Permutation& candidate) const;

  SearchStats& stats() { return stats_; }
  const SearchStats& stats() const { return stats_; }

 private:
  EquationDescriptor equation_;
  SolveMethod method_;
  bool complete_;
  SearchStats stats_;
  std::vector<Permutation> solutions_;  // sorted, unique
};

}  // namespace permeq
