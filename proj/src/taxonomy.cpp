#include "nichebench/taxonomy.hpp"

#include <charconv>

#include "nichebench/csv.hpp"
#include "nichebench/error.hpp"
#include "parse_util.hpp"

namespace nichebench {

Level level_from_int(int level) {
  if (level < 1 || level > 3) {
    throw Error(ErrorKind::InvalidQuery, "level must be 1, 2 or 3, got " + std::to_string(level));
  }
  return static_cast<Level>(level);
}

SubjectTaxonomy SubjectTaxonomy::from_nodes(std::vector<SubjectNode> nodes) {
  SubjectTaxonomy tax;
  for (auto& n : nodes) {
    const SubjectCode code = n.code;
    if (!tax.nodes_.emplace(code, std::move(n)).second) {
      throw Error(ErrorKind::DuplicateId, "subject " + std::to_string(code));
    }
  }
  for (const auto& [code, n] : tax.nodes_) {
    if (n.level == Level::Discipline) {
      if (n.parent) {
        throw Error(ErrorKind::MalformedRow,
                    "level-1 subject " + std::to_string(code) + " must not have a parent");
      }
      continue;
    }
    if (!n.parent) {
      throw Error(ErrorKind::MalformedRow,
                  "subject " + std::to_string(code) + " at level " +
                      std::to_string(static_cast<int>(n.level)) + " has no parent");
    }
    auto it = tax.nodes_.find(*n.parent);
    if (it == tax.nodes_.end()) {
      throw Error(ErrorKind::DanglingReference, "subject " + std::to_string(*n.parent));
    }
    // Parent exactly one level up; this also makes cycles impossible.
    if (static_cast<int>(it->second.level) != static_cast<int>(n.level) - 1) {
      throw Error(ErrorKind::MalformedRow, "subject " + std::to_string(code) +
                                               " has parent " + std::to_string(*n.parent) +
                                               " at the wrong level");
    }
    tax.children_[*n.parent].insert(code);
  }
  return tax;
}

SubjectTaxonomy SubjectTaxonomy::load(const std::filesystem::path& file) {
  const auto table = csv::read_file(file, {"code", "name", "level", "parent_code"});
  std::vector<SubjectNode> nodes;
  nodes.reserve(table.records.size());
  for (const auto& rec : table.records) {
    const auto& f = rec.fields;
    const detail::RowContext ctx{table.path, rec.line};
    SubjectNode n;
    n.code = detail::parse_int(f[0], ctx, "code");
    n.name = f[1];
    const auto level = detail::parse_int(f[2], ctx, "level");
    if (level < 1 || level > 3) ctx.fail("level must be 1, 2 or 3");
    n.level = static_cast<Level>(level);
    if (!f[3].empty()) n.parent = detail::parse_int(f[3], ctx, "parent_code");
    nodes.push_back(std::move(n));
  }
  return from_nodes(std::move(nodes));
}

const SubjectNode& SubjectTaxonomy::node(SubjectCode code) const {
  auto it = nodes_.find(code);
  if (it == nodes_.end()) throw Error(ErrorKind::UnknownCode, std::to_string(code));
  return it->second;
}

std::vector<SubjectCode> SubjectTaxonomy::roots() const {
  std::vector<SubjectCode> out;
  for (const auto& [code, n] : nodes_) {
    if (n.level == Level::Discipline) out.push_back(code);
  }
  return out;
}

const std::set<SubjectCode>& SubjectTaxonomy::children(SubjectCode code) const {
  static const std::set<SubjectCode> kNone;
  node(code);
  auto it = children_.find(code);
  return it == children_.end() ? kNone : it->second;
}

SubjectChain SubjectTaxonomy::ancestors(SubjectCode code) const {
  SubjectChain chain;
  const SubjectNode* n = &node(code);
  while (true) {
    switch (n->level) {
      case Level::Niche: chain.niche = n->code; break;
      case Level::SubDiscipline: chain.sub_discipline = n->code; break;
      case Level::Discipline: chain.discipline = n->code; return chain;
    }
    n = &nodes_.at(*n->parent);
  }
}

std::set<SubjectCode> SubjectTaxonomy::descendants(SubjectCode code) const {
  std::set<SubjectCode> out;
  std::vector<SubjectCode> stack{code};
  node(code);
  while (!stack.empty()) {
    const SubjectCode c = stack.back();
    stack.pop_back();
    if (nodes_.at(c).level == Level::Niche) {
      out.insert(c);
      continue;
    }
    if (auto it = children_.find(c); it != children_.end()) {
      stack.insert(stack.end(), it->second.begin(), it->second.end());
    }
  }
  return out;
}

std::optional<SubjectCode> SubjectTaxonomy::ancestor_at(SubjectCode code, Level level) const {
  const auto chain = ancestors(code);
  switch (level) {
    case Level::Discipline: return chain.discipline;
    case Level::SubDiscipline: return chain.sub_discipline;
    case Level::Niche: return chain.niche;
  }
  return std::nullopt;
}

std::set<SubjectCode> SubjectTaxonomy::subjects_at(std::span<const SubjectCode> niche_codes,
                                                   Level level) const {
  std::set<SubjectCode> out;
  for (SubjectCode c : niche_codes) {
    if (auto a = ancestor_at(c, level)) out.insert(*a);
  }
  return out;
}

}  // namespace nichebench
