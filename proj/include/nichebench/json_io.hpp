#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nichebench/benchmark.hpp"
#include "nichebench/rating.hpp"

namespace nichebench {

using Json = nlohmann::json;

// Output documents. Objects use sorted keys and doubles keep full precision,
// so serialization is byte-stable for identical inputs.
Json to_json(const IndicatorVector& v);
Json to_json(const std::vector<RatingRow>& rows);
Json to_json(const BenchmarkProfile& profile);
Json to_json(const std::vector<BenchmarkProfile>& profiles);
Json to_json(const OverallRating& overall, const Corpus& corpus);
Json to_json(const ValidationReport& report);
Json taxonomy_json(const SubjectTaxonomy& taxonomy);
Json institutions_json(const Corpus& corpus, const std::string& region);

/// Rating table as CSV (University, Publication, Citation, H-index, % top SNIP,
/// CPP, Band), with
/// pct_top_snip and cpp rounded to two decimals.
std::string rating_csv(const std::vector<RatingRow>& rows);

/// Defaults applied to request fields the client leaves out.
struct QueryDefaults {
  YearWindow window;
  std::int64_t min_pubs = kDefaultMinPubs;
};

/// Parses a rating request body:
///   {"subject": int, "level": 1..3, "window": [start, end], "region": str,
///    "weights": "equal"|"volume"|"quality"|[5 numbers], "min_pubs": int}
/// `subject` and `level` are required. Throws InvalidQuery on any violation,
/// including unknown keys.
RatingQuery rating_query_from_json(const Json& body, const QueryDefaults& defaults);
Json to_json(const RatingQuery& query);

struct BenchmarkRequest {
  std::vector<std::string> institutions;
  SubjectCode subject = 0;
  Level level = Level::Discipline;
  YearWindow window;
};

/// {"institutions": [ids], "subject": int, "level": 1..3, "window": [s, e]}
BenchmarkRequest benchmark_request_from_json(const Json& body, const QueryDefaults& defaults);
Json to_json(const BenchmarkRequest& request);

/// Compact dump used for HTTP bodies; `pretty` adds two-space indentation.
std::string dump(const Json& j, bool pretty = false);

}  // namespace nichebench
