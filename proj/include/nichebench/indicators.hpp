#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nichebench/corpus.hpp"

namespace nichebench {

/// Fixed indicator order used by weights, normalization, and JSON arrays.
enum class Indicator : int { Pubs = 0, Cites = 1, HIndex = 2, PctTopSnip = 3, Cpp = 4 };
inline constexpr std::size_t kIndicatorCount = 5;
inline constexpr std::array<const char*, kIndicatorCount> kIndicatorNames = {
    "pubs", "cites", "h", "pct_top_snip", "cpp"};

struct IndicatorVector {
  std::int64_t total_pubs = 0;
  std::int64_t total_cites = 0;
  std::int64_t h_index = 0;
  double pct_top_snip = 0.0;
  double cpp = 0.0;

  std::array<double, kIndicatorCount> as_array() const {
    return {static_cast<double>(total_pubs), static_cast<double>(total_cites),
            static_cast<double>(h_index), pct_top_snip, cpp};
  }
  bool operator==(const IndicatorVector&) const = default;
};

/// Largest h such that at least h of the counts are >= h.
std::int64_t h_index(std::span<const std::int64_t> citation_counts);

/// Citations per paper; 0 for an empty cell.
double cpp(std::int64_t total_cites, std::int64_t total_pubs);

/// Per level-3 subject, the journals ranked in the top quartile by SNIP.
class SnipQuartileTable {
 public:
  SnipQuartileTable() = default;
  explicit SnipQuartileTable(std::map<SubjectCode, std::set<std::string>> top)
      : top_(std::move(top)) {}

  /// Empty set for subjects without SNIP-bearing journals.
  const std::set<std::string>& top_journals(SubjectCode niche_code) const;

  /// True if `journal_id` is top-quartile in any of `niche_scope`.
  bool in_top(const std::string& journal_id, const std::set<SubjectCode>& niche_scope) const;

  const std::map<SubjectCode, std::set<std::string>>& entries() const { return top_; }

 private:
  std::map<SubjectCode, std::set<std::string>> top_;
};

/// Ranks each level-3 subject's SNIP-bearing journals by SNIP descending and
/// keeps the top ceil(25%), plus every journal tied with the cutoff value.
SnipQuartileTable build_snip_quartiles(const Corpus& corpus);

/// Share (0..100) of `publications` whose journal is top-quartile in any
/// subject of `niche_scope`. The denominator counts every publication,
/// including those in journals without SNIP.
double pct_top_snip(std::span<const PublicationRecord* const> publications,
                    const SnipQuartileTable& quartiles, const std::set<SubjectCode>& niche_scope);

/// A corpus together with its derived quartile table; the unit every engine
/// and the service operate on.
class Dataset {
 public:
  explicit Dataset(Corpus corpus)
      : corpus_(std::move(corpus)), quartiles_(build_snip_quartiles(corpus_)) {}

  const Corpus& corpus() const { return corpus_; }
  const SnipQuartileTable& quartiles() const { return quartiles_; }

 private:
  Corpus corpus_;
  SnipQuartileTable quartiles_;
};

/// Publications of one institution inside an (subject, level, window) cell.
std::vector<const PublicationRecord*> cell_publications(const Corpus& corpus,
                                                        const std::string& institution_id,
                                                        SubjectCode subject, Level level,
                                                        YearWindow window);

/// Throws UnknownCode unless `subject` exists and sits at `level`.
void check_subject(const SubjectTaxonomy& taxonomy, SubjectCode subject, Level level);

/// Throws InvalidQuery unless `window` is ordered and inside the corpus window.
void check_window(const Corpus& corpus, YearWindow window);

IndicatorVector indicator_vector(const Dataset& data, const std::string& institution_id,
                                 SubjectCode subject, Level level, YearWindow window);

}  // namespace nichebench
