#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nichebench/taxonomy.hpp"

namespace nichebench {

/// Inclusive calendar-year range.
struct YearWindow {
  int start = 2008;
  int end = 2013;

  bool contains(int year) const { return year >= start && year <= end; }
  bool operator==(const YearWindow&) const = default;
};

/// Throws Error(InvalidQuery) if start > end.
YearWindow make_window(int start, int end);

struct PublicationRecord {
  std::string pub_id;
  std::string institution_id;
  std::string journal_id;
  int year = 0;
  std::int64_t citations = 0;
  std::string title;
};

struct JournalRecord {
  std::string journal_id;
  std::string title;
  std::vector<SubjectCode> asjc_codes;  // level-3, sorted, unique
  std::optional<double> snip_2010;
};

struct InstitutionRecord {
  std::string institution_id;
  std::string name;
  std::string region;
};

/// Region value that matches every institution in queries.
inline constexpr const char* kAllRegions = "ALL";

struct CorpusPaths {
  std::filesystem::path publications;
  std::filesystem::path journals;
  std::filesystem::path institutions;
  std::filesystem::path taxonomy;
  std::filesystem::path snip;

  /// The five canonical file names inside `dir`.
  static CorpusPaths in_directory(const std::filesystem::path& dir);
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> snip_absent;         // journal ids
  std::vector<std::string> out_of_window;       // pub ids
  std::vector<std::string> idle_institutions;   // institution ids with zero publications

  std::size_t warning_count() const {
    return snip_absent.size() + out_of_window.size() + idle_institutions.size();
  }
  bool ok() const { return errors.empty(); }
};

/// Immutable, referentially closed publication corpus.
class Corpus {
 public:
  /// Validates referential closure and id uniqueness; throws DanglingReference
  /// or DuplicateId on violation, MalformedRow on negative citations or SNIP.
  static Corpus build(std::vector<PublicationRecord> publications,
                      std::vector<JournalRecord> journals,
                      std::vector<InstitutionRecord> institutions, SubjectTaxonomy taxonomy,
                      YearWindow window = {});

  const std::vector<PublicationRecord>& publications() const { return publications_; }
  const std::map<std::string, JournalRecord>& journals() const { return journals_; }
  const std::map<std::string, InstitutionRecord>& institutions() const { return institutions_; }
  const SubjectTaxonomy& taxonomy() const { return taxonomy_; }
  YearWindow window() const { return window_; }

  /// Distinct regions declared by institutions.csv, sorted.
  const std::set<std::string>& regions() const { return regions_; }

  const JournalRecord& journal(const std::string& id) const;
  const InstitutionRecord& institution(const std::string& id) const;

  /// Indices into publications() for one institution, in file order.
  const std::vector<std::size_t>& publications_of(const std::string& institution_id) const;

  /// A journal's memberships at a level (full counting, de-duplicated).
  const std::set<SubjectCode>& subjects_of_journal(const std::string& journal_id,
                                                   Level level) const;

  /// Throws UnknownRegion unless `region` is ALL or a declared region.
  void check_region(const std::string& region) const;
  bool in_region(const InstitutionRecord& inst, const std::string& region) const {
    return region == kAllRegions || inst.region == region;
  }

 private:
  Corpus() = default;

  std::vector<PublicationRecord> publications_;
  std::map<std::string, JournalRecord> journals_;
  std::map<std::string, InstitutionRecord> institutions_;
  SubjectTaxonomy taxonomy_;
  YearWindow window_;
  std::set<std::string> regions_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_institution_;
  std::unordered_map<std::string, std::array<std::set<SubjectCode>, 3>> journal_subjects_;
};

Corpus load_corpus(const CorpusPaths& paths, YearWindow window = {});

ValidationReport validate_corpus(const Corpus& corpus);

/// Deterministic JSON summary (row counts plus a content digest).
std::string corpus_summary(const Corpus& corpus);

}  // namespace nichebench
