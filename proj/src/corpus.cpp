#include "nichebench/corpus.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "digest.hpp"
#include "nichebench/csv.hpp"
#include "nichebench/error.hpp"
#include "parse_util.hpp"

namespace nichebench {

YearWindow make_window(int start, int end) {
  if (start > end) {
    throw Error(ErrorKind::InvalidQuery, "year window start " + std::to_string(start) +
                                             " is after end " + std::to_string(end));
  }
  return YearWindow{start, end};
}

CorpusPaths CorpusPaths::in_directory(const std::filesystem::path& dir) {
  return {dir / "publications.csv", dir / "journals.csv", dir / "institutions.csv",
          dir / "taxonomy.csv", dir / "snip.csv"};
}

Corpus Corpus::build(std::vector<PublicationRecord> publications,
                     std::vector<JournalRecord> journals,
                     std::vector<InstitutionRecord> institutions, SubjectTaxonomy taxonomy,
                     YearWindow window) {
  Corpus c;
  c.window_ = make_window(window.start, window.end);
  c.taxonomy_ = std::move(taxonomy);

  for (auto& inst : institutions) {
    if (inst.region.empty() || inst.region == kAllRegions) {
      throw Error(ErrorKind::MalformedRow,
                  "institution " + inst.institution_id + " has invalid region '" + inst.region + "'");
    }
    c.regions_.insert(inst.region);
    const std::string id = inst.institution_id;
    if (!c.institutions_.emplace(id, std::move(inst)).second) {
      throw Error(ErrorKind::DuplicateId, "institution " + id);
    }
  }

  for (auto& j : journals) {
    std::sort(j.asjc_codes.begin(), j.asjc_codes.end());
    j.asjc_codes.erase(std::unique(j.asjc_codes.begin(), j.asjc_codes.end()), j.asjc_codes.end());
    if (j.asjc_codes.empty()) {
      throw Error(ErrorKind::MalformedRow, "journal " + j.journal_id + " has no ASJC codes");
    }
    for (SubjectCode code : j.asjc_codes) {
      if (!c.taxonomy_.contains(code)) {
        throw Error(ErrorKind::DanglingReference, "subject " + std::to_string(code) +
                                                      " (journal " + j.journal_id + ")");
      }
      if (c.taxonomy_.node(code).level != Level::Niche) {
        throw Error(ErrorKind::MalformedRow, "journal " + j.journal_id + " code " +
                                                 std::to_string(code) + " is not a level-3 subject");
      }
    }
    if (j.snip_2010 && !(*j.snip_2010 >= 0.0)) {
      throw Error(ErrorKind::MalformedRow, "journal " + j.journal_id + " has negative SNIP");
    }
    auto& memberships = c.journal_subjects_[j.journal_id];
    for (int lvl = 1; lvl <= 3; ++lvl) {
      memberships[lvl - 1] = c.taxonomy_.subjects_at(j.asjc_codes, static_cast<Level>(lvl));
    }
    const std::string id = j.journal_id;
    if (!c.journals_.emplace(id, std::move(j)).second) {
      throw Error(ErrorKind::DuplicateId, "journal " + id);
    }
  }

  std::set<std::string> pub_ids;
  for (std::size_t i = 0; i < publications.size(); ++i) {
    const auto& p = publications[i];
    if (!pub_ids.insert(p.pub_id).second) throw Error(ErrorKind::DuplicateId, "publication " + p.pub_id);
    if (!c.journals_.contains(p.journal_id)) {
      throw Error(ErrorKind::DanglingReference, "journal " + p.journal_id);
    }
    if (!c.institutions_.contains(p.institution_id)) {
      throw Error(ErrorKind::DanglingReference, "institution " + p.institution_id);
    }
    if (p.citations < 0) {
      throw Error(ErrorKind::MalformedRow, "publication " + p.pub_id + " has negative citations");
    }
    c.by_institution_[p.institution_id].push_back(i);
  }
  c.publications_ = std::move(publications);
  return c;
}

const JournalRecord& Corpus::journal(const std::string& id) const {
  auto it = journals_.find(id);
  if (it == journals_.end()) throw Error(ErrorKind::DanglingReference, "journal " + id);
  return it->second;
}

const InstitutionRecord& Corpus::institution(const std::string& id) const {
  auto it = institutions_.find(id);
  if (it == institutions_.end()) throw Error(ErrorKind::UnknownInstitution, id);
  return it->second;
}

const std::vector<std::size_t>& Corpus::publications_of(const std::string& institution_id) const {
  static const std::vector<std::size_t> kNone;
  institution(institution_id);
  auto it = by_institution_.find(institution_id);
  return it == by_institution_.end() ? kNone : it->second;
}

const std::set<SubjectCode>& Corpus::subjects_of_journal(const std::string& journal_id,
                                                         Level level) const {
  auto it = journal_subjects_.find(journal_id);
  if (it == journal_subjects_.end()) throw Error(ErrorKind::DanglingReference, "journal " + journal_id);
  return it->second[static_cast<int>(level) - 1];
}

void Corpus::check_region(const std::string& region) const {
  if (region != kAllRegions && !regions_.contains(region)) {
    throw Error(ErrorKind::UnknownRegion, region);
  }
}

Corpus load_corpus(const CorpusPaths& paths, YearWindow window) {
  for (const auto* p : {&paths.publications, &paths.journals, &paths.institutions,
                        &paths.taxonomy, &paths.snip}) {
    if (!std::filesystem::is_regular_file(*p)) throw Error(ErrorKind::MissingFile, p->string());
  }

  auto taxonomy = SubjectTaxonomy::load(paths.taxonomy);

  std::vector<InstitutionRecord> institutions;
  {
    const auto t = csv::read_file(paths.institutions, {"institution_id", "name", "region"});
    for (const auto& rec : t.records) {
      if (rec.fields[0].empty()) detail::RowContext{t.path, rec.line}.fail("empty institution_id");
      institutions.push_back({rec.fields[0], rec.fields[1], rec.fields[2]});
    }
  }

  std::vector<JournalRecord> journals;
  std::map<std::string, std::size_t> journal_index;
  {
    const auto t = csv::read_file(paths.journals, {"journal_id", "title", "asjc_codes"});
    for (const auto& rec : t.records) {
      const detail::RowContext ctx{t.path, rec.line};
      JournalRecord j{rec.fields[0], rec.fields[1], {}, std::nullopt};
      if (j.journal_id.empty()) ctx.fail("empty journal_id");
      std::string_view codes = rec.fields[2];
      while (!codes.empty()) {
        const auto cut = codes.find(';');
        const auto token = codes.substr(0, cut);
        j.asjc_codes.push_back(detail::parse_int(token, ctx, "asjc code"));
        if (cut == std::string_view::npos) break;
        codes.remove_prefix(cut + 1);
      }
      if (j.asjc_codes.empty()) ctx.fail("journal has no ASJC codes");
      journal_index.emplace(j.journal_id, journals.size());
      journals.push_back(std::move(j));
    }
  }

  {
    const auto t = csv::read_file(paths.snip, {"journal_id", "snip_2010"});
    std::set<std::string> seen;
    for (const auto& rec : t.records) {
      const detail::RowContext ctx{t.path, rec.line};
      const auto& id = rec.fields[0];
      auto it = journal_index.find(id);
      if (it == journal_index.end()) throw Error(ErrorKind::DanglingReference, "journal " + id);
      if (!seen.insert(id).second) throw Error(ErrorKind::DuplicateId, "snip for journal " + id);
      if (rec.fields[1].empty()) continue;
      const double snip = detail::parse_decimal(rec.fields[1], ctx, "snip_2010");
      if (!(snip >= 0.0)) ctx.fail("snip_2010 must be non-negative");
      journals[it->second].snip_2010 = snip;
    }
  }

  std::vector<PublicationRecord> publications;
  {
    const auto t = csv::read_file(
        paths.publications, {"pub_id", "institution_id", "journal_id", "year", "citations", "title"});
    publications.reserve(t.records.size());
    for (const auto& rec : t.records) {
      const detail::RowContext ctx{t.path, rec.line};
      const auto& f = rec.fields;
      if (f[0].empty()) ctx.fail("empty pub_id");
      PublicationRecord p{f[0], f[1], f[2], 0, 0, f[5]};
      p.year = static_cast<int>(detail::parse_int(f[3], ctx, "year"));
      p.citations = detail::parse_int(f[4], ctx, "citations");
      if (p.citations < 0) ctx.fail("citations must be non-negative");
      publications.push_back(std::move(p));
    }
  }

  return Corpus::build(std::move(publications), std::move(journals), std::move(institutions),
                       std::move(taxonomy), window);
}

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport r;
  for (const auto& [id, j] : corpus.journals()) {
    if (!j.snip_2010) r.snip_absent.push_back(id);
  }
  for (const auto& p : corpus.publications()) {
    if (!corpus.window().contains(p.year)) r.out_of_window.push_back(p.pub_id);
  }
  for (const auto& [id, inst] : corpus.institutions()) {
    if (corpus.publications_of(id).empty()) r.idle_institutions.push_back(id);
  }
  return r;
}

std::string corpus_summary(const Corpus& corpus) {
  detail::Fnv1a h;
  for (const auto& [code, n] : corpus.taxonomy().nodes()) {
    h.field(std::to_string(code));
    h.field(n.name);
    h.field(std::to_string(static_cast<int>(n.level)));
    h.field(n.parent ? std::to_string(*n.parent) : "");
  }
  for (const auto& [id, inst] : corpus.institutions()) {
    h.field(id);
    h.field(inst.name);
    h.field(inst.region);
  }
  for (const auto& [id, j] : corpus.journals()) {
    h.field(id);
    h.field(j.title);
    for (auto c : j.asjc_codes) h.field(std::to_string(c));
    std::ostringstream snip;
    if (j.snip_2010) snip << *j.snip_2010;
    h.field(snip.str());
  }
  for (const auto& p : corpus.publications()) {
    h.field(p.pub_id);
    h.field(p.institution_id);
    h.field(p.journal_id);
    h.field(std::to_string(p.year));
    h.field(std::to_string(p.citations));
    h.field(p.title);
  }
  nlohmann::json j = {
      {"publications", corpus.publications().size()},
      {"journals", corpus.journals().size()},
      {"institutions", corpus.institutions().size()},
      {"subjects", corpus.taxonomy().size()},
      {"window", {corpus.window().start, corpus.window().end}},
      {"digest", h.hex()},
  };
  return j.dump();
}

}  // namespace nichebench
