#pragma once

#include <array>
#include <string>
#include <vector>

#include "nichebench/indicators.hpp"

namespace nichebench {

inline constexpr std::size_t kMaxBenchmarkInstitutions = 5;

struct BenchmarkEntry {
  std::string institution_id;
  std::array<double, kIndicatorCount> actual{};
  std::array<double, kIndicatorCount> percentage{};
};

struct BenchmarkProfile {
  SubjectCode subject = 0;
  Level level = Level::Discipline;
  YearWindow window;
  std::vector<BenchmarkEntry> entries;  // in request order
  std::array<bool, kIndicatorCount> degenerate{};  // column max was 0
};

struct SubjectSpec {
  SubjectCode subject = 0;
  Level level = Level::Discipline;
};

/// Column-wise max normalization of raw indicator rows, in percent.
/// Sets `degenerate[k]` for all-zero columns (their percentages stay 0).
void fill_percentages(std::vector<BenchmarkEntry>& entries,
                      std::array<bool, kIndicatorCount>& degenerate);

/// Compares 1..5 distinct institutions in one subject; no publication
/// threshold applies. Throws TooManyInstitutions, UnknownInstitution,
/// UnknownCode, InvalidQuery (empty or duplicate ids, bad window).
BenchmarkProfile benchmark(const Dataset& data, const std::vector<std::string>& institution_ids,
                           SubjectCode subject, Level level, YearWindow window);

/// One independently normalized profile per entry of `subjects`.
std::vector<BenchmarkProfile> benchmark_multi(const Dataset& data,
                                              const std::vector<std::string>& institution_ids,
                                              const std::vector<SubjectSpec>& subjects,
                                              YearWindow window);

}  // namespace nichebench
