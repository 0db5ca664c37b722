#include "nichebench/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nichebench/error.hpp"

namespace nichebench {

std::int64_t h_index(std::span<const std::int64_t> citation_counts) {
  std::vector<std::int64_t> sorted(citation_counts.begin(), citation_counts.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::int64_t h = 0;
  // sorted[i] >= i + 1 means the top i + 1 papers each have at least i + 1 citations.
  while (h < static_cast<std::int64_t>(sorted.size()) && sorted[h] >= h + 1) ++h;
  return h;
}

double cpp(std::int64_t total_cites, std::int64_t total_pubs) {
  if (total_pubs <= 0) return 0.0;
  return static_cast<double>(total_cites) / static_cast<double>(total_pubs);
}

const std::set<std::string>& SnipQuartileTable::top_journals(SubjectCode niche_code) const {
  static const std::set<std::string> kNone;
  auto it = top_.find(niche_code);
  return it == top_.end() ? kNone : it->second;
}

bool SnipQuartileTable::in_top(const std::string& journal_id,
                               const std::set<SubjectCode>& niche_scope) const {
  for (SubjectCode code : niche_scope) {
    if (top_journals(code).contains(journal_id)) return true;
  }
  return false;
}

SnipQuartileTable build_snip_quartiles(const Corpus& corpus) {
  std::map<SubjectCode, std::vector<std::pair<double, std::string>>> ranked;
  for (const auto& [id, j] : corpus.journals()) {
    if (!j.snip_2010) continue;
    for (SubjectCode code : j.asjc_codes) ranked[code].emplace_back(*j.snip_2010, id);
  }
  std::map<SubjectCode, std::set<std::string>> top;
  for (auto& [code, journals] : ranked) {
    std::sort(journals.begin(), journals.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    const auto slots = static_cast<std::size_t>(std::ceil(0.25 * static_cast<double>(journals.size())));
    const double cutoff = journals[slots - 1].first;
    auto& set = top[code];
    for (const auto& [snip, id] : journals) {
      if (snip < cutoff) break;
      set.insert(id);
    }
  }
  return SnipQuartileTable(std::move(top));
}

double pct_top_snip(std::span<const PublicationRecord* const> publications,
                    const SnipQuartileTable& quartiles, const std::set<SubjectCode>& niche_scope) {
  if (publications.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto* p : publications) {
    if (quartiles.in_top(p->journal_id, niche_scope)) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(publications.size());
}

void check_subject(const SubjectTaxonomy& taxonomy, SubjectCode subject, Level level) {
  if (!taxonomy.contains(subject)) throw Error(ErrorKind::UnknownCode, std::to_string(subject));
  if (taxonomy.node(subject).level != level) {
    throw Error(ErrorKind::UnknownCode, std::to_string(subject) + " is not a level-" +
                                            std::to_string(static_cast<int>(level)) + " subject");
  }
}

void check_window(const Corpus& corpus, YearWindow window) {
  make_window(window.start, window.end);
  const auto w = corpus.window();
  if (window.start < w.start || window.end > w.end) {
    throw Error(ErrorKind::InvalidQuery,
                "year window " + std::to_string(window.start) + ":" + std::to_string(window.end) +
                    " is outside the corpus window " + std::to_string(w.start) + ":" +
                    std::to_string(w.end));
  }
}

std::vector<const PublicationRecord*> cell_publications(const Corpus& corpus,
                                                        const std::string& institution_id,
                                                        SubjectCode subject, Level level,
                                                        YearWindow window) {
  std::vector<const PublicationRecord*> out;
  const auto& pubs = corpus.publications();
  for (std::size_t i : corpus.publications_of(institution_id)) {
    const auto& p = pubs[i];
    if (!window.contains(p.year)) continue;
    if (corpus.subjects_of_journal(p.journal_id, level).contains(subject)) out.push_back(&p);
  }
  return out;
}

IndicatorVector indicator_vector(const Dataset& data, const std::string& institution_id,
                                 SubjectCode subject, Level level, YearWindow window) {
  const auto& corpus = data.corpus();
  corpus.institution(institution_id);
  check_subject(corpus.taxonomy(), subject, level);
  check_window(corpus, window);

  const auto cell = cell_publications(corpus, institution_id, subject, level, window);
  IndicatorVector v;
  if (cell.empty()) return v;

  std::vector<std::int64_t> cites;
  cites.reserve(cell.size());
  for (const auto* p : cell) {
    cites.push_back(p->citations);
    v.total_cites += p->citations;
  }
  v.total_pubs = static_cast<std::int64_t>(cell.size());
  v.h_index = h_index(cites);
  v.pct_top_snip = pct_top_snip(cell, data.quartiles(), corpus.taxonomy().descendants(subject));
  v.cpp = cpp(v.total_cites, v.total_pubs);
  return v;
}

}  // namespace nichebench
