#include "nichebench/rating.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "nichebench/error.hpp"

namespace nichebench {

namespace {

// Scores that land within this distance of an integer are snapped onto it so
// that boundary values such as 90 band the same regardless of rounding noise.
constexpr double kSnapTolerance = 1e-9;

double snap(double percentage) {
  const double r = std::round(percentage);
  return std::abs(percentage - r) < kSnapTolerance ? r : percentage;
}

// Ordering key: percentages that differ only by summation noise compare
// equal and fall through to the publication tie-breaker.
std::int64_t rank_key(double percentage) { return std::llround(percentage / kSnapTolerance); }

}  // namespace

Preset preset_from_string(std::string_view name) {
  if (name == "equal") return Preset::Equal;
  if (name == "volume") return Preset::Volume;
  if (name == "quality") return Preset::Quality;
  throw Error(ErrorKind::InvalidQuery, "unknown weight preset '" + std::string(name) + "'");
}

std::string_view to_string(Preset preset) {
  switch (preset) {
    case Preset::Equal: return "equal";
    case Preset::Volume: return "volume";
    case Preset::Quality: return "quality";
  }
  return "equal";
}

WeightScheme::WeightScheme(std::array<double, kIndicatorCount> weights) : weights_(weights) {
  bool any_positive = false;
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 100.0)) {
      throw Error(ErrorKind::InvalidQuery, "weights must lie in [0, 100]");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw Error(ErrorKind::InvalidQuery, "at least one weight must be positive");
}

WeightScheme WeightScheme::from_preset(Preset preset) {
  switch (preset) {
    case Preset::Volume: return WeightScheme({100, 100, 100, 0, 0});
    case Preset::Quality: return WeightScheme({0, 0, 0, 100, 100});
    case Preset::Equal: break;
  }
  return WeightScheme({50, 50, 50, 50, 50});
}

WeightScheme WeightScheme::parse(std::string_view text) {
  if (text.find(',') == std::string_view::npos) return from_preset(preset_from_string(text));
  std::vector<std::string_view> tokens;
  while (true) {
    const auto cut = text.find(',');
    tokens.push_back(text.substr(0, cut));
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  if (tokens.size() != kIndicatorCount) {
    throw Error(ErrorKind::InvalidQuery, "expected five comma-separated weights");
  }
  std::array<double, kIndicatorCount> w{};
  for (std::size_t i = 0; i < kIndicatorCount; ++i) {
    auto token = tokens[i];
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w[i]);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::InvalidQuery, "invalid weight '" + std::string(token) + "'");
    }
  }
  return WeightScheme(w);
}

std::vector<double> normalize(std::span<const double> values) {
  double max = 0.0;
  for (double v : values) max = std::max(max, v);
  std::vector<double> out(values.size(), 0.0);
  if (max <= 0.0) return out;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / max;
  return out;
}

double weighted_total(const std::array<double, kIndicatorCount>& normalized,
                      const WeightScheme& weights) {
  double total = 0.0;
  for (std::size_t i = 0; i < kIndicatorCount; ++i) total += weights.values()[i] * normalized[i];
  return total;
}

std::vector<double> percentage_scores(std::span<const double> grand_totals) {
  if (grand_totals.empty()) throw Error(ErrorKind::EmptyScope, "no institutions to score");
  auto out = normalize(grand_totals);
  for (double& v : out) v *= 100.0;
  return out;
}

int band(double percentage) {
  if (!(percentage >= 0.0 && percentage <= 100.0)) {
    throw Error(ErrorKind::OutOfRange, "percentage " + std::to_string(percentage));
  }
  if (percentage <= 0.0) return 10;
  // Band k covers (100 - 10k, 110 - 10k].
  const int k = 11 - static_cast<int>(std::ceil(percentage / 10.0));
  return std::clamp(k, 1, 10);
}

std::vector<RatingRow> rate_subject(const Dataset& data, const RatingQuery& query) {
  const auto& corpus = data.corpus();
  corpus.check_region(query.region);
  check_subject(corpus.taxonomy(), query.subject, query.level);
  check_window(corpus, query.window);
  if (query.min_pubs < 0) throw Error(ErrorKind::InvalidQuery, "min_pubs must be non-negative");

  std::vector<RatingRow> rows;
  for (const auto& [id, inst] : corpus.institutions()) {
    if (!corpus.in_region(inst, query.region)) continue;
    auto v = indicator_vector(data, id, query.subject, query.level, query.window);
    if (v.total_pubs < query.min_pubs) continue;
    rows.push_back(RatingRow{id, inst.name, v, 0.0, 0.0, 10});
  }
  if (rows.empty()) {
    throw Error(ErrorKind::EmptyScope, "no institution reaches " + std::to_string(query.min_pubs) +
                                           " publications in subject " +
                                           std::to_string(query.subject));
  }

  std::array<std::vector<double>, kIndicatorCount> normalized;
  for (std::size_t k = 0; k < kIndicatorCount; ++k) {
    std::vector<double> column;
    column.reserve(rows.size());
    for (const auto& r : rows) column.push_back(r.vector.as_array()[k]);
    normalized[k] = normalize(column);
  }

  std::vector<double> totals;
  totals.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::array<double, kIndicatorCount> n{};
    for (std::size_t k = 0; k < kIndicatorCount; ++k) n[k] = normalized[k][i];
    rows[i].grand_total = weighted_total(n, query.weights);
    totals.push_back(rows[i].grand_total);
  }
  const auto pct = percentage_scores(totals);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].percentage = snap(pct[i]);
    rows[i].band = band(rows[i].percentage);
  }

  std::sort(rows.begin(), rows.end(), [](const RatingRow& a, const RatingRow& b) {
    if (rank_key(a.percentage) != rank_key(b.percentage)) return a.percentage > b.percentage;
    if (a.vector.total_pubs != b.vector.total_pubs) return a.vector.total_pubs > b.vector.total_pubs;
    if (a.name != b.name) return a.name < b.name;
    return a.institution_id < b.institution_id;
  });
  return rows;
}

std::vector<SubjectCode> top_disciplines(const Corpus& corpus, std::size_t count) {
  const auto roots = corpus.taxonomy().roots();
  if (roots.size() < count) {
    throw Error(ErrorKind::InsufficientTaxonomy,
                "need " + std::to_string(count) + " level-1 subjects, taxonomy has " +
                    std::to_string(roots.size()));
  }
  std::map<SubjectCode, std::size_t> volume;
  for (SubjectCode r : roots) volume[r] = 0;
  for (const auto& p : corpus.publications()) {
    if (!corpus.window().contains(p.year)) continue;
    for (SubjectCode r : corpus.subjects_of_journal(p.journal_id, Level::Discipline)) ++volume[r];
  }
  std::vector<SubjectCode> ordered(roots.begin(), roots.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](SubjectCode a, SubjectCode b) { return volume[a] > volume[b]; });
  ordered.resize(count);
  return ordered;
}

OverallRating rate_overall(const Dataset& data, const std::string& region, Preset preset,
                           std::optional<YearWindow> window, std::int64_t min_pubs) {
  const auto& corpus = data.corpus();
  corpus.check_region(region);

  OverallRating out;
  out.preset = preset;
  out.region = region;
  out.window = window.value_or(corpus.window());
  out.subjects = top_disciplines(corpus);
  for (const auto& [id, inst] : corpus.institutions()) {
    if (corpus.in_region(inst, region)) out.institutions.push_back(id);
  }
  out.bands.assign(out.institutions.size(),
                   std::vector<std::optional<int>>(out.subjects.size(), std::nullopt));

  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < out.institutions.size(); ++i) row_of[out.institutions[i]] = i;

  for (std::size_t col = 0; col < out.subjects.size(); ++col) {
    RatingQuery q;
    q.window = out.window;
    q.region = region;
    q.subject = out.subjects[col];
    q.level = Level::Discipline;
    q.weights = WeightScheme::from_preset(preset);
    q.min_pubs = min_pubs;
    try {
      for (const auto& r : rate_subject(data, q)) out.bands[row_of.at(r.institution_id)][col] = r.band;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EmptyScope) throw;
    }
  }
  return out;
}

}  // namespace nichebench
