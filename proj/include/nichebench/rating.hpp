#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nichebench/indicators.hpp"

namespace nichebench {

enum class Preset { Equal, Volume, Quality };

/// Throws InvalidQuery on anything other than equal, volume, quality.
Preset preset_from_string(std::string_view name);
std::string_view to_string(Preset preset);

/// Per-indicator weights in [0, 100], indicator order (pubs, cites, h,
/// pct_top_snip, cpp). At least one weight must be positive.
class WeightScheme {
 public:
  /// Throws InvalidQuery when a weight is outside [0, 100] or all are zero.
  explicit WeightScheme(std::array<double, kIndicatorCount> weights);

  static WeightScheme from_preset(Preset preset);

  /// Accepts a preset name or five comma-separated numbers.
  static WeightScheme parse(std::string_view text);

  const std::array<double, kIndicatorCount>& values() const { return weights_; }
  double operator[](Indicator i) const { return weights_[static_cast<std::size_t>(i)]; }
  bool operator==(const WeightScheme&) const = default;

 private:
  std::array<double, kIndicatorCount> weights_;
};

inline constexpr std::int64_t kDefaultMinPubs = 40;

struct RatingQuery {
  YearWindow window;
  std::string region = kAllRegions;
  SubjectCode subject = 0;
  Level level = Level::Discipline;
  WeightScheme weights = WeightScheme::from_preset(Preset::Equal);
  std::int64_t min_pubs = kDefaultMinPubs;
};

struct RatingRow {
  std::string institution_id;
  std::string name;
  IndicatorVector vector;
  double grand_total = 0.0;
  double percentage = 0.0;
  int band = 10;
};

/// Divides every value by the maximum; all zeros when the maximum is 0.
std::vector<double> normalize(std::span<const double> values);

/// Sum of weight * normalized value.
double weighted_total(const std::array<double, kIndicatorCount>& normalized,
                      const WeightScheme& weights);

/// 100 * total / max(total). Throws EmptyScope on an empty list.
std::vector<double> percentage_scores(std::span<const double> grand_totals);

/// Decile band: 1 for (90, 100], ..., 10 for (0, 10] and for 0 itself.
/// Throws OutOfRange outside [0, 100].
int band(double percentage);

/// Rates every in-region institution that reaches `min_pubs` in the cell.
/// Rows are ordered by percentage, then publications (both descending), then
/// name and id. Throws EmptyScope, UnknownCode, UnknownRegion, InvalidQuery.
std::vector<RatingRow> rate_subject(const Dataset& data, const RatingQuery& query);

/// Band matrix over the 15 level-1 subjects with the most publications.
struct OverallRating {
  Preset preset = Preset::Equal;
  std::string region;
  YearWindow window;
  std::vector<SubjectCode> subjects;          // column order
  std::vector<std::string> institutions;      // row order (id ascending)
  std::vector<std::vector<std::optional<int>>> bands;  // [row][column]; nullopt = below threshold
};

inline constexpr std::size_t kOverallSubjects = 15;

/// Level-1 subjects ordered by total corpus publications (descending, code
/// ascending on ties). Throws InsufficientTaxonomy below 15 disciplines.
std::vector<SubjectCode> top_disciplines(const Corpus& corpus, std::size_t count = kOverallSubjects);

OverallRating rate_overall(const Dataset& data, const std::string& region, Preset preset,
                           std::optional<YearWindow> window = std::nullopt,
                           std::int64_t min_pubs = kDefaultMinPubs);

}  // namespace nichebench
