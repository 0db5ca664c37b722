#include "support/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace nb = nichebench;

namespace oracle {

std::int64_t h_index(const std::vector<std::int64_t>& citations) {
  std::int64_t best = 0;
  for (std::int64_t h = 0; h <= static_cast<std::int64_t>(citations.size()); ++h) {
    std::int64_t at_least = 0;
    for (auto c : citations) at_least += c >= h ? 1 : 0;
    if (at_least >= h) best = h;
  }
  return best;
}

std::set<std::string> top_quartile(const nb::Corpus& corpus, nb::SubjectCode leaf) {
  std::vector<double> values;
  for (const auto& [id, j] : corpus.journals()) {
    if (j.snip_2010 && std::count(j.asjc_codes.begin(), j.asjc_codes.end(), leaf)) {
      values.push_back(*j.snip_2010);
    }
  }
  std::set<std::string> out;
  if (values.empty()) return out;
  std::sort(values.rbegin(), values.rend());
  const std::size_t slots = (values.size() + 3) / 4;
  const double cutoff = values[slots - 1];
  for (const auto& [id, j] : corpus.journals()) {
    if (j.snip_2010 && *j.snip_2010 >= cutoff &&
        std::count(j.asjc_codes.begin(), j.asjc_codes.end(), leaf)) {
      out.insert(id);
    }
  }
  return out;
}

namespace {

bool under(const nb::Corpus& corpus, nb::SubjectCode node, nb::SubjectCode subject) {
  const auto& nodes = corpus.taxonomy().nodes();
  while (true) {
    if (node == subject) return true;
    const auto& n = nodes.at(node);
    if (!n.parent) return false;
    node = *n.parent;
  }
}

std::vector<nb::SubjectCode> leaves_under(const nb::Corpus& corpus, nb::SubjectCode subject) {
  std::vector<nb::SubjectCode> out;
  for (const auto& [code, n] : corpus.taxonomy().nodes()) {
    if (n.level == nb::Level::Niche && under(corpus, code, subject)) out.push_back(code);
  }
  return out;
}

}  // namespace

bool journal_in_subject(const nb::Corpus& corpus, const std::string& journal_id,
                        nb::SubjectCode subject) {
  for (auto code : corpus.journals().at(journal_id).asjc_codes) {
    if (under(corpus, code, subject)) return true;
  }
  return false;
}

nb::IndicatorVector vector(const nb::Corpus& corpus, const std::string& institution,
                           nb::SubjectCode subject, nb::YearWindow window) {
  std::set<std::string> top;
  for (auto leaf : leaves_under(corpus, subject)) {
    auto t = top_quartile(corpus, leaf);
    top.insert(t.begin(), t.end());
  }
  nb::IndicatorVector v;
  std::vector<std::int64_t> cites;
  std::int64_t in_top = 0;
  for (const auto& p : corpus.publications()) {
    if (p.institution_id != institution) continue;
    if (p.year < window.start || p.year > window.end) continue;
    if (!journal_in_subject(corpus, p.journal_id, subject)) continue;
    ++v.total_pubs;
    v.total_cites += p.citations;
    cites.push_back(p.citations);
    if (top.contains(p.journal_id)) ++in_top;
  }
  v.h_index = h_index(cites);
  if (v.total_pubs > 0) {
    v.pct_top_snip = 100.0 * static_cast<double>(in_top) / static_cast<double>(v.total_pubs);
    v.cpp = static_cast<double>(v.total_cites) / static_cast<double>(v.total_pubs);
  }
  return v;
}

int band(double percentage) {
  // Integer decile ranges, widened to cover the gaps between them.
  static const struct { int lo, hi, band; } kTable[] = {
      {91, 100, 1}, {81, 90, 2}, {71, 80, 3}, {61, 70, 4}, {51, 60, 5},
      {41, 50, 6},  {31, 40, 7}, {21, 30, 8}, {11, 20, 9}, {1, 10, 10}};
  if (percentage == 0.0) return 10;
  for (const auto& row : kTable) {
    if (percentage > row.lo - 1 && percentage <= row.hi) return row.band;
  }
  return -1;
}

std::vector<Row> rate(const nb::Corpus& corpus, const nb::RatingQuery& q) {
  std::vector<Row> rows;
  for (const auto& [id, inst] : corpus.institutions()) {
    if (q.region != "ALL" && inst.region != q.region) continue;
    auto v = vector(corpus, id, q.subject, q.window);
    if (v.total_pubs < q.min_pubs) continue;
    rows.push_back({id, v, 0, 0});
  }
  if (rows.empty()) return rows;

  double max[5] = {0, 0, 0, 0, 0};
  auto raw = [](const nb::IndicatorVector& v, int k) {
    switch (k) {
      case 0: return static_cast<double>(v.total_pubs);
      case 1: return static_cast<double>(v.total_cites);
      case 2: return static_cast<double>(v.h_index);
      case 3: return v.pct_top_snip;
      default: return v.cpp;
    }
  };
  for (const auto& r : rows)
    for (int k = 0; k < 5; ++k) max[k] = std::max(max[k], raw(r.vector, k));

  std::vector<double> totals;
  double top = 0;
  for (const auto& r : rows) {
    double t = 0;
    for (int k = 0; k < 5; ++k) {
      if (max[k] > 0) t += q.weights.values()[k] * raw(r.vector, k) / max[k];
    }
    totals.push_back(t);
    top = std::max(top, t);
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double p = top > 0 ? 100.0 * totals[i] / top : 0.0;
    if (std::abs(p - std::round(p)) < 1e-9) p = std::round(p);
    rows[i].percentage = p;
    rows[i].band = band(p);
  }
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    const auto ka = std::llround(a.percentage * 1e9), kb = std::llround(b.percentage * 1e9);
    if (ka != kb) return ka > kb;
    if (a.vector.total_pubs != b.vector.total_pubs) return a.vector.total_pubs > b.vector.total_pubs;
    const auto& na = corpus.institutions().at(a.institution).name;
    const auto& nbm = corpus.institutions().at(b.institution).name;
    if (na != nbm) return na < nbm;
    return a.institution < b.institution;
  });
  return rows;
}

}  // namespace oracle
