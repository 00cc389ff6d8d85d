#pragma once

#include <string>

#include "permeq/certifier.hpp"
#include "permeq/constructor.hpp"
#include "permeq/cycle_analysis.hpp"
#include "permeq/solution_set.hpp"

namespace permeq {

/// JSON serialization with deterministic key order: identical values always
/// produce identical bytes. Permutations appear as canonical cycle-notation
/// strings. Search timings are deliberately not serialized.

std::string to_json_string(const DRange& range);
std::string to_json_string(const Certificate& certificate, int indent = 2);
std::string to_json_string(const SolutionSet& set, int indent = 2);
std::string to_json_string(const B1Instance& instance, int indent = 2);
std::string to_json_string(const TransportWitness& witness, int indent = 2);

}  // namespace permeq
