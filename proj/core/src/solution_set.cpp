#include "permeq/solution_set.hpp"

#include <algorithm>

namespace permeq {

EquationDescriptor EquationDescriptor::starstar(Permutation alpha, unsigned k) {
  if (k < 1) throw Error("exponent k must be >= 1");
  return EquationDescriptor{EquationKind::StarStar, std::move(alpha), k};
}

EquationDescriptor EquationDescriptor::star(Permutation alpha) {
  return EquationDescriptor{EquationKind::Star, std::move(alpha), 2};
}

EquationDescriptor EquationDescriptor::square_root(Permutation sigma) {
  return EquationDescriptor{EquationKind::SquareRoot, std::move(sigma), 2};
}

bool EquationDescriptor::satisfied_by(const Permutation& candidate) const {
  if (candidate.degree() != base.degree()) return false;
  const unsigned n = base.degree();
  switch (kind) {
    case EquationKind::StarStar: {
      const Permutation lhs = conjugate(candidate, base);
      return lhs == power(candidate, k);
    }
    case EquationKind::Star: {
      // alpha o x = x o alpha o x o alpha, checked pointwise
      for (Point t = 1; t <= n; ++t)
        if (base(candidate(t)) != candidate(base(candidate(base(t))))) return false;
      return true;
    }
    case EquationKind::SquareRoot: {
      for (Point t = 1; t <= n; ++t)
        if (candidate(candidate(t)) != base(t)) return false;
      return true;
    }
  }
  return false;
}

std::string EquationDescriptor::to_string() const {
  switch (kind) {
    case EquationKind::StarStar:
      return "alpha*y*alpha^-1 = y^" + std::to_string(k) +
             " with alpha = " + format_cycles(base);
    case EquationKind::Star:
      return "alpha*x = x*alpha*x*alpha with alpha = " + format_cycles(base);
    case EquationKind::SquareRoot:
      return "y*y = sigma with sigma = " + format_cycles(base);
  }
  return {};
}

std::string to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::Naive:
      return "naive";
    case SolveMethod::Pruned:
      return "pruned";
    case SolveMethod::Constructed:
      return "constructed";
    case SolveMethod::Certified:
      return "certified";
  }
  return {};
}

SolutionSet::SolutionSet(EquationDescriptor equation, SolveMethod method,
                         bool complete)
    : equation_(std::move(equation)), method_(method), complete_(complete) {}

void SolutionSet::insert(const Permutation& candidate) {
  if (!equation_.satisfied_by(candidate))
    throw VerificationError(format_cycles(candidate) + " does not satisfy " +
                            equation_.to_string());
  const auto it = std::lower_bound(solutions_.begin(), solutions_.end(), candidate);
  if (it != solutions_.end() && *it == candidate) return;
  solutions_.insert(it, candidate);
}

bool SolutionSet::contains(const Permutation& candidate) const {
  return std::binary_search(solutions_.begin(), solutions_.end(), candidate);
}

}  // namespace permeq
