#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace nichebench {

using SubjectCode = std::int64_t;

/// ASJC hierarchy depth: discipline, sub-discipline, niche area.
enum class Level : int { Discipline = 1, SubDiscipline = 2, Niche = 3 };

/// Accepts 1..3, throws Error(InvalidQuery) otherwise.
Level level_from_int(int level);

struct SubjectNode {
  SubjectCode code = 0;
  std::string name;
  Level level = Level::Discipline;
  std::optional<SubjectCode> parent;
};

/// Result of walking a node up to its root. A level-1 input yields only the
/// root; a level-2 input has no niche entry.
struct SubjectChain {
  std::optional<SubjectCode> niche;
  std::optional<SubjectCode> sub_discipline;
  SubjectCode discipline = 0;

  bool operator==(const SubjectChain&) const = default;
};

class SubjectTaxonomy {
 public:
  SubjectTaxonomy() = default;

  /// Builds and validates the forest. Throws DuplicateId on repeated codes,
  /// DanglingReference on unknown parents, MalformedRow on level/parent
  /// mismatches (which also rules out cycles).
  static SubjectTaxonomy from_nodes(std::vector<SubjectNode> nodes);

  /// Reads taxonomy.csv (`code,name,level,parent_code`).
  static SubjectTaxonomy load(const std::filesystem::path& file);

  bool contains(SubjectCode code) const { return nodes_.contains(code); }
  const SubjectNode& node(SubjectCode code) const;
  const std::map<SubjectCode, SubjectNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  std::vector<SubjectCode> roots() const;
  const std::set<SubjectCode>& children(SubjectCode code) const;

  SubjectChain ancestors(SubjectCode code) const;

  /// Level-3 leaves under `code`; a level-3 input returns itself.
  std::set<SubjectCode> descendants(SubjectCode code) const;

  /// Ancestor of `code` at `level`; nullopt when `level` is below the node.
  std::optional<SubjectCode> ancestor_at(SubjectCode code, Level level) const;

  /// De-duplicated memberships of a set of level-3 codes at `level`.
  std::set<SubjectCode> subjects_at(std::span<const SubjectCode> niche_codes, Level level) const;

 private:
  std::map<SubjectCode, SubjectNode> nodes_;
  std::map<SubjectCode, std::set<SubjectCode>> children_;
};

}  // namespace nichebench
