#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nichebench/indicators.hpp"

namespace testing_support {

std::filesystem::path fixture_dir();

/// Loaded once per process.
const nichebench::Dataset& fixture();

/// Counts data rows of a fixture CSV by reading lines, independent of the
/// engine's CSV reader. Only valid for files without embedded newlines.
std::size_t count_data_lines(const std::filesystem::path& file);

/// Small taxonomy: two disciplines (100, 200), each with two sub-disciplines
/// holding two niche areas.
///   100 -> 110 -> {111, 112}, 100 -> 120 -> {121, 122}
///   200 -> 210 -> {211, 212}, 200 -> 220 -> {221, 222}
nichebench::SubjectTaxonomy tiny_taxonomy();

/// Temporary directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  void write(const std::string& name, const std::string& content) const;

 private:
  std::filesystem::path path_;
};

/// Copies the fixture CSVs into a fresh TempDir.
void copy_fixture_to(const TempDir& dir);

}  // namespace testing_support
