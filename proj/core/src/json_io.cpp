#include "permeq/json_io.hpp"

#include "json.hpp"

namespace permeq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
  return v == Verdict::OnlyTrivial ? "OnlyTrivial" : "Inconclusive";
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::A1:
      return "A1";
    case Theorem::A2:
      return "A2";
    case Theorem::A3:
      return "A3";
  }
  return {};
}

ordered_json equation_json(const EquationDescriptor& eq) {
  ordered_json j;
  switch (eq.kind) {
    case EquationKind::StarStar:
      j["equation"] = "starstar";
      j["alpha"] = format_cycles(eq.base);
      j["k"] = eq.k;
      break;
    case EquationKind::Star:
      j["equation"] = "star";
      j["alpha"] = format_cycles(eq.base);
      break;
    case EquationKind::SquareRoot:
      j["equation"] = "square_root";
      j["sigma"] = format_cycles(eq.base);
      break;
  }
  j["degree"] = eq.base.degree();
  return j;
}

}  // namespace

std::string to_json_string(const DRange& range) {
  return ordered_json(range.members).dump();
}

std::string to_json_string(const Certificate& certificate, int indent) {
  ordered_json j;
  j["verdict"] = verdict_name(certificate.verdict);
  j["theorem"] = theorem_name(certificate.theorem);
  j["degree"] = certificate.degree;
  j["alpha_type"] = certificate.alpha_lengths;
  if (certificate.theorem == Theorem::A1) {
    ordered_json pairs = ordered_json::array();
    for (const PairRecord& pair : certificate.pairs) {
      ordered_json p;
      p["d"] = pair.d;
      p["r"] = pair.r;
      p["gd"] = pair.g_d;
      p["gcd"] = pair.gcd_value;
      p["witness"] = pair.witness;
      p["ok"] = pair.ok;
      pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
  }
  if (!certificate.prime_checks.empty()) {
    ordered_json checks = ordered_json::array();
    for (const PrimeCheck& check : certificate.prime_checks) {
      ordered_json c;
      c["p"] = check.p;
      c["e"] = check.e;
      c["divides"] = check.divides;
      c["length"] = check.cycle_length;
      checks.push_back(std::move(c));
    }
    j["prime_checks"] = std::move(checks);
  }
  if (certificate.vacuous) j["vacuous"] = true;
  if (certificate.failure) {
    ordered_json f;
    if (certificate.failure_pair) {
      f["d"] = certificate.failure_pair->first;
      f["r"] = certificate.failure_pair->second;
    }
    f["reason"] = *certificate.failure;
    j["failure"] = std::move(f);
  }
  return j.dump(indent) + "\n";
}

std::string to_json_string(const SolutionSet& set, int indent) {
  ordered_json j = equation_json(set.equation());
  j["method"] = to_string(set.method());
  j["complete"] = set.complete();
  j["stats"]["candidates"] = set.stats().candidates;
  j["count"] = set.size();
  ordered_json solutions = ordered_json::array();
  for (const Permutation& y : set.solutions()) solutions.push_back(format_cycles(y));
  j["solutions"] = std::move(solutions);
  return j.dump(indent) + "\n";
}

std::string to_json_string(const B1Instance& instance, int indent) {
  ordered_json j;
  j["n"] = instance.n;
  j["p"] = instance.p;
  j["q"] = instance.q;
  j["beta"] = format_cycles(instance.beta);
  j["y"] = format_cycles(instance.y);
  return j.dump(indent) + "\n";
}

std::string to_json_string(const TransportWitness& witness, int indent) {
  ordered_json j;
  j["tau"] = format_cycles(witness.tau);
  ordered_json alignment = ordered_json::array();
  for (const auto& [from, to] : witness.alignment) {
    ordered_json pair;
    pair["source"] = ordered_json(from.points);
    pair["target"] = ordered_json(to.points);
    alignment.push_back(std::move(pair));
  }
  j["alignment"] = std::move(alignment);
  return j.dump(indent) + "\n";
}

}  // namespace permeq
