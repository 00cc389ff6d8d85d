#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permeq/certifier.hpp"
#include "permeq/enumerator.hpp"

namespace permeq {

/// A cycle type of S_n as a partition of n, parts in decreasing order.
using Partition = std::vector<unsigned>;

/// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ...,
/// [1,...,1].
std::vector<Partition> partitions(unsigned n);

/// The canonical representative of a cycle type: cycles laid over
/// consecutive points in decreasing length, starting at 1.
Permutation type_representative(const Partition& parts);

/// One row of the survey table: certificates and the exact solution count
/// (from pruned enumeration) for one cycle type representative.
struct SurveyRow {
  unsigned n = 0;
  Partition partition;
  Verdict cert_a1 = Verdict::Inconclusive;
  Verdict cert_a2 = Verdict::Inconclusive;
  std::uint64_t solution_count = 0;
  std::optional<std::string> example_solution;  // first non-trivial, if any
};

/// Sweeps every cycle type of S_n. Rows are computed independently across a
/// bounded worker pool and assembled in partition order, so the result does
/// not depend on the worker count.
std::vector<SurveyRow> survey(unsigned n, const Guards& guards = {},
                              unsigned workers = 1);

/// JSON array of rows; byte-stable for fixed inputs.
std::string survey_json(const std::vector<SurveyRow>& rows);

/// CSV with fixed column order n,partition,cert_a1,cert_a2,solution_count,
/// example_solution; the partition is written as "3+2+1" and the example
/// solution is quoted (cycle notation contains commas).
std::string survey_csv(const std::vector<SurveyRow>& rows);

}  // namespace permeq
