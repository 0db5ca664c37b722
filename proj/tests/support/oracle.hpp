#pragma once

// Brute-force reference implementations used to check the engines. They work
// from the raw corpus records only: no engine indexes, no taxonomy helpers,
// no quartile table, no shared scoring code.

#include <set>
#include <string>
#include <vector>

#include "nichebench/corpus.hpp"
#include "nichebench/indicators.hpp"
#include "nichebench/rating.hpp"

namespace oracle {

std::int64_t h_index(const std::vector<std::int64_t>& citations);

std::set<std::string> top_quartile(const nichebench::Corpus& corpus, nichebench::SubjectCode leaf);

bool journal_in_subject(const nichebench::Corpus& corpus, const std::string& journal_id,
                        nichebench::SubjectCode subject);

nichebench::IndicatorVector vector(const nichebench::Corpus& corpus, const std::string& institution,
                                   nichebench::SubjectCode subject, nichebench::YearWindow window);

int band(double percentage);

struct Row {
  std::string institution;
  nichebench::IndicatorVector vector;
  double percentage = 0;
  int band = 0;
};

/// Empty result when nobody passes the threshold.
std::vector<Row> rate(const nichebench::Corpus& corpus, const nichebench::RatingQuery& query);

}  // namespace oracle
