#include "nichebench/json_io.hpp"

#include <cstdio>
#include <set>

#include "nichebench/csv.hpp"
#include "nichebench/error.hpp"

namespace nichebench {

namespace {

[[noreturn]] void bad_request(const std::string& msg) { throw Error(ErrorKind::InvalidQuery, msg); }

Json window_json(YearWindow w) { return Json::array({w.start, w.end}); }

void reject_unknown_keys(const Json& body, const std::set<std::string>& allowed) {
  if (!body.is_object()) bad_request("request body must be a JSON object");
  for (const auto& [key, _] : body.items()) {
    if (!allowed.contains(key)) bad_request("unknown field '" + key + "'");
  }
}

std::int64_t require_int(const Json& body, const char* key) {
  if (!body.contains(key)) bad_request(std::string("missing field '") + key + "'");
  const auto& v = body.at(key);
  if (!v.is_number_integer()) bad_request(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

YearWindow window_from(const Json& body, YearWindow fallback) {
  if (!body.contains("window")) return fallback;
  const auto& w = body.at("window");
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer()) {
    bad_request("field 'window' must be [start, end]");
  }
  return make_window(w[0].get<int>(), w[1].get<int>());
}

Level level_from(const Json& body) {
  const auto level = require_int(body, "level");
  if (level < 1 || level > 3) bad_request("field 'level' must be 1, 2 or 3");
  return static_cast<Level>(level);
}

std::string two_decimals(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Json taxonomy_node(const SubjectTaxonomy& tax, SubjectCode code) {
  const auto& n = tax.node(code);
  Json node = {{"code", n.code}, {"name", n.name}, {"level", static_cast<int>(n.level)}};
  Json children = Json::array();
  for (SubjectCode c : tax.children(code)) children.push_back(taxonomy_node(tax, c));
  node["children"] = std::move(children);
  return node;
}

}  // namespace

Json to_json(const IndicatorVector& v) {
  return {{"pubs", v.total_pubs}, {"cites", v.total_cites}, {"h", v.h_index},
          {"pct_top_snip", v.pct_top_snip}, {"cpp", v.cpp}};
}

Json to_json(const std::vector<RatingRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = to_json(r.vector);
    row["institution"] = r.institution_id;
    row["name"] = r.name;
    row["percentage"] = r.percentage;
    row["band"] = r.band;
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const BenchmarkProfile& profile) {
  Json entries = Json::array();
  for (const auto& e : profile.entries) {
    entries.push_back({{"institution", e.institution_id}, {"actual", e.actual}, {"pct", e.percentage}});
  }
  return {{"subject", profile.subject},
          {"level", static_cast<int>(profile.level)},
          {"window", window_json(profile.window)},
          {"indicators", kIndicatorNames},
          {"entries", std::move(entries)},
          {"degenerate", profile.degenerate}};
}

Json to_json(const std::vector<BenchmarkProfile>& profiles) {
  Json out = Json::array();
  for (const auto& p : profiles) out.push_back(to_json(p));
  return out;
}

Json to_json(const OverallRating& overall, const Corpus& corpus) {
  Json subjects = Json::array();
  for (SubjectCode c : overall.subjects) {
    subjects.push_back({{"code", c}, {"name", corpus.taxonomy().node(c).name}});
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < overall.institutions.size(); ++i) {
    Json bands = Json::array();
    for (const auto& b : overall.bands[i]) bands.push_back(b ? Json(*b) : Json(nullptr));
    const auto& id = overall.institutions[i];
    rows.push_back({{"institution", id}, {"name", corpus.institution(id).name}, {"bands", std::move(bands)}});
  }
  return {{"preset", std::string(to_string(overall.preset))},
          {"region", overall.region},
          {"window", window_json(overall.window)},
          {"subjects", std::move(subjects)},
          {"rows", std::move(rows)}};
}

Json to_json(const ValidationReport& report) {
  return {{"errors", report.errors},
          {"warnings",
           {{"snip_absent", report.snip_absent},
            {"out_of_window", report.out_of_window},
            {"idle_institutions", report.idle_institutions}}},
          {"warning_count", report.warning_count()}};
}

Json taxonomy_json(const SubjectTaxonomy& taxonomy) {
  Json roots = Json::array();
  for (SubjectCode r : taxonomy.roots()) roots.push_back(taxonomy_node(taxonomy, r));
  return {{"count", taxonomy.size()}, {"roots", std::move(roots)}};
}

Json institutions_json(const Corpus& corpus, const std::string& region) {
  corpus.check_region(region);
  Json out = Json::array();
  for (const auto& [id, inst] : corpus.institutions()) {
    if (!corpus.in_region(inst, region)) continue;
    out.push_back({{"institution", id}, {"name", inst.name}, {"region", inst.region},
                   {"pubs", corpus.publications_of(id).size()}});
  }
  return out;
}

std::string rating_csv(const std::vector<RatingRow>& rows) {
  std::string out = "University,Publication,Citation,H-index,% Pubs in top 25% SNIP,CPP,Band\n";
  for (const auto& r : rows) {
    out += csv::escape(r.name) + ',' + std::to_string(r.vector.total_pubs) + ',' +
           std::to_string(r.vector.total_cites) + ',' + std::to_string(r.vector.h_index) + ',' +
           two_decimals(r.vector.pct_top_snip) + ',' + two_decimals(r.vector.cpp) + ',' +
           std::to_string(r.band) + '\n';
  }
  return out;
}

RatingQuery rating_query_from_json(const Json& body, const QueryDefaults& defaults) {
  reject_unknown_keys(body, {"subject", "level", "window", "region", "weights", "min_pubs"});
  RatingQuery q;
  q.subject = require_int(body, "subject");
  q.level = level_from(body);
  q.window = window_from(body, defaults.window);
  q.min_pubs = defaults.min_pubs;
  if (body.contains("region")) {
    if (!body["region"].is_string()) bad_request("field 'region' must be a string");
    q.region = body["region"].get<std::string>();
  }
  if (body.contains("min_pubs")) {
    q.min_pubs = require_int(body, "min_pubs");
    if (q.min_pubs < 0) bad_request("field 'min_pubs' must be non-negative");
  }
  if (body.contains("weights")) {
    const auto& w = body["weights"];
    if (w.is_string()) {
      q.weights = WeightScheme::from_preset(preset_from_string(w.get<std::string>()));
    } else if (w.is_array() && w.size() == kIndicatorCount) {
      std::array<double, kIndicatorCount> values{};
      for (std::size_t i = 0; i < kIndicatorCount; ++i) {
        if (!w[i].is_number()) bad_request("weights must be numbers");
        values[i] = w[i].get<double>();
      }
      q.weights = WeightScheme(values);
    } else {
      bad_request("field 'weights' must be a preset name or five numbers");
    }
  }
  return q;
}

Json to_json(const RatingQuery& q) {
  return {{"subject", q.subject},
          {"level", static_cast<int>(q.level)},
          {"window", window_json(q.window)},
          {"region", q.region},
          {"weights", q.weights.values()},
          {"min_pubs", q.min_pubs}};
}

BenchmarkRequest benchmark_request_from_json(const Json& body, const QueryDefaults& defaults) {
  reject_unknown_keys(body, {"institutions", "subject", "level", "window"});
  BenchmarkRequest r;
  if (!body.contains("institutions") || !body["institutions"].is_array()) {
    bad_request("field 'institutions' must be an array of ids");
  }
  for (const auto& id : body["institutions"]) {
    if (!id.is_string()) bad_request("institution ids must be strings");
    r.institutions.push_back(id.get<std::string>());
  }
  r.subject = require_int(body, "subject");
  r.level = level_from(body);
  r.window = window_from(body, defaults.window);
  return r;
}

Json to_json(const BenchmarkRequest& r) {
  return {{"institutions", r.institutions},
          {"subject", r.subject},
          {"level", static_cast<int>(r.level)},
          {"window", window_json(r.window)}};
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace nichebench
