#include "permeq/survey.hpp"

#include <atomic>
#include <thread>

#include "json.hpp"

namespace permeq {

namespace {

void collect_partitions(unsigned remaining, unsigned max_part, Partition& current,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(max_part, remaining); part >= 1; --part) {
    current.push_back(part);
    collect_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(unsigned n) {
  std::vector<Partition> out;
  Partition current;
  collect_partitions(n, n, current, out);
  return out;
}

Permutation type_representative(const Partition& parts) {
  unsigned n = 0;
  for (unsigned part : parts) {
    if (part == 0) throw Error("partition parts must be >= 1");
    n += part;
  }
  if (n == 0) throw Error("empty partition");
  std::vector<Point> table(n + 1);
  table[0] = 0;
  unsigned start = 1;
  for (unsigned part : parts) {
    for (unsigned i = 0; i < part; ++i)
      table[start + i] = start + (i + 1) % part;
    start += part;
  }
  return Permutation::from_table_unchecked(std::move(table));
}

std::vector<SurveyRow> survey(unsigned n, const Guards& guards, unsigned workers) {
  if (n > guards.pruned_max)
    throw GuardError("survey requires n <= pruned guard (" +
                     std::to_string(guards.pruned_max) + "), got " +
                     std::to_string(n));
  const std::vector<Partition> types = partitions(n);
  std::vector<SurveyRow> rows(types.size());

  const unsigned thread_count =
      std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(types.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next.fetch_add(1); i < types.size(); i = next.fetch_add(1)) {
      const Permutation alpha = type_representative(types[i]);
      SurveyRow row;
      row.n = n;
      row.partition = types[i];
      row.cert_a1 = certify_a1(alpha).verdict;
      row.cert_a2 = certify_a2(alpha).verdict;
      const SolutionSet solutions = enumerate_pruned(alpha, guards);
      row.solution_count = solutions.size();
      if (solutions.size() > 1)
        row.example_solution = format_cycles(solutions.solutions()[1]);
      rows[i] = std::move(row);
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
  return rows;
}

namespace {

std::string verdict_name(Verdict v) {
  return v == Verdict::OnlyTrivial ? "OnlyTrivial" : "Inconclusive";
}

std::string partition_plus(const Partition& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace

std::string survey_json(const std::vector<SurveyRow>& rows) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const SurveyRow& row : rows) {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["partition"] = row.partition;
    j["cert_a1"] = verdict_name(row.cert_a1);
    j["cert_a2"] = verdict_name(row.cert_a2);
    j["solution_count"] = row.solution_count;
    if (row.example_solution) j["example_solution"] = *row.example_solution;
    array.push_back(std::move(j));
  }
  return array.dump(2) + "\n";
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::string out = "n,partition,cert_a1,cert_a2,solution_count,example_solution\n";
  for (const SurveyRow& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += partition_plus(row.partition);
    out += ',';
    out += verdict_name(row.cert_a1);
    out += ',';
    out += verdict_name(row.cert_a2);
    out += ',';
    out += std::to_string(row.solution_count);
    out += ',';
    if (row.example_solution) out += '"' + *row.example_solution + '"';
    out += '\n';
  }
  return out;
}

}  // namespace permeq
