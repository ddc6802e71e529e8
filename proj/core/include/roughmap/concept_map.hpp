#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace roughmap {

/// One node as declared in a map file. `phrase` is the optional linking phrase
/// on the edge to the parent; analysis never reads it.
struct RawNode {
  std::string id;
  std::optional<std::string> parent;
  std::optional<std::string> phrase;

  friend bool operator==(const RawNode&, const RawNode&) = default;
};

/// A validated rooted tree of concept nodes. Node order is declaration order.
class ConceptMap {
 public:
  const std::string& subject() const noexcept { return subject_; }
  const std::vector<RawNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  const std::string& root() const { return nodes_[root_].id; }
  std::size_t root_index() const noexcept { return root_; }

  bool contains(const std::string& id) const { return index_.contains(id); }
  std::optional<std::size_t> index_of(const std::string& id) const;
  /// Parent id, or nullopt for the root. Throws UnknownParent for foreign ids.
  const std::optional<std::string>& parent_of(const std::string& id) const;
  /// Child indices in declaration order.
  const std::vector<std::size_t>& children(std::size_t index) const { return children_[index]; }
  std::optional<std::size_t> parent_index(std::size_t index) const { return parent_[index]; }
  bool is_leaf(std::size_t index) const { return children_[index].empty(); }

  friend ConceptMap validate_map(std::string subject, std::vector<RawNode> nodes);

 private:
  ConceptMap() = default;

  std::string subject_;
  std::vector<RawNode> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::size_t root_ = 0;
};

/// Checks, in order: duplicate ids, dangling parents, cycles, then the root count.
ConceptMap validate_map(std::string subject, std::vector<RawNode> nodes);

/// Depth of every node, parallel to `map.nodes()`. The root is level 0.
std::vector<int> compute_levels(const ConceptMap& map);

enum class NodeColor { Green, Red };

std::string_view to_string(NodeColor color) noexcept;

/// Teacher/student merge. Colors and levels are parallel to `tree().nodes()`;
/// the root carries no color.
class IntegratedMap {
 public:
  IntegratedMap(ConceptMap tree, std::vector<std::optional<NodeColor>> colors);

  const ConceptMap& tree() const noexcept { return tree_; }
  const std::string& subject() const noexcept { return tree_.subject(); }
  std::size_t size() const noexcept { return tree_.size(); }
  const std::string& id(std::size_t index) const { return tree_.nodes()[index].id; }
  int level(std::size_t index) const { return levels_[index]; }
  const std::vector<int>& levels() const noexcept { return levels_; }
  std::optional<NodeColor> color(std::size_t index) const { return colors_[index]; }
  const std::vector<std::optional<NodeColor>>& colors() const noexcept { return colors_; }
  int depth() const noexcept { return depth_; }

 private:
  ConceptMap tree_;
  std::vector<std::optional<NodeColor>> colors_;
  std::vector<int> levels_;
  int depth_ = 0;
};

/// A non-root node is consistent in a map when that map has the same id under
/// the same parent. Teacher nodes inconsistent in the student map are red;
/// everything else is green. Nodes present in the teacher keep the teacher's
/// parent; student-only nodes hang under their declared parent.
IntegratedMap integrate(const ConceptMap& teacher, const ConceptMap& student);

}  // namespace roughmap
