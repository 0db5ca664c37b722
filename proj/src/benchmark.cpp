#include "nichebench/benchmark.hpp"

#include <algorithm>
#include <set>

#include "nichebench/error.hpp"

namespace nichebench {

void fill_percentages(std::vector<BenchmarkEntry>& entries,
                      std::array<bool, kIndicatorCount>& degenerate) {
  for (std::size_t k = 0; k < kIndicatorCount; ++k) {
    double max = 0.0;
    for (const auto& e : entries) max = std::max(max, e.actual[k]);
    degenerate[k] = max <= 0.0;
    for (auto& e : entries) e.percentage[k] = degenerate[k] ? 0.0 : 100.0 * (e.actual[k] / max);
  }
}

BenchmarkProfile benchmark(const Dataset& data, const std::vector<std::string>& institution_ids,
                           SubjectCode subject, Level level, YearWindow window) {
  if (institution_ids.empty()) {
    throw Error(ErrorKind::InvalidQuery, "benchmark needs at least one institution");
  }
  if (institution_ids.size() > kMaxBenchmarkInstitutions) {
    throw Error(ErrorKind::TooManyInstitutions,
                std::to_string(institution_ids.size()) + " institutions requested, at most " +
                    std::to_string(kMaxBenchmarkInstitutions) + " allowed");
  }
  std::set<std::string> seen;
  for (const auto& id : institution_ids) {
    data.corpus().institution(id);
    if (!seen.insert(id).second) throw Error(ErrorKind::InvalidQuery, "duplicate institution " + id);
  }

  BenchmarkProfile profile;
  profile.subject = subject;
  profile.level = level;
  profile.window = window;
  for (const auto& id : institution_ids) {
    BenchmarkEntry e;
    e.institution_id = id;
    e.actual = indicator_vector(data, id, subject, level, window).as_array();
    profile.entries.push_back(std::move(e));
  }
  fill_percentages(profile.entries, profile.degenerate);
  return profile;
}

std::vector<BenchmarkProfile> benchmark_multi(const Dataset& data,
                                              const std::vector<std::string>& institution_ids,
                                              const std::vector<SubjectSpec>& subjects,
                                              YearWindow window) {
  std::vector<BenchmarkProfile> out;
  out.reserve(subjects.size());
  for (const auto& s : subjects) out.push_back(benchmark(data, institution_ids, s.subject, s.level, window));
  return out;
}

}  // namespace nichebench
