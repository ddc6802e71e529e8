#include "roughmap/concept_map.hpp"

#include <algorithm>

#include "roughmap/error.hpp"

namespace roughmap {

std::optional<std::size_t> ConceptMap::index_of(const std::string& id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return std::nullopt;
}

const std::optional<std::string>& ConceptMap::parent_of(const std::string& id) const {
  auto idx = index_of(id);
  if (!idx) throw Error(ErrorKind::UnknownParent, "no node '" + id + "' in map");
  return nodes_[*idx].parent;
}

ConceptMap validate_map(std::string subject, std::vector<RawNode> nodes) {
  ConceptMap map;
  map.subject_ = std::move(subject);
  map.nodes_ = std::move(nodes);
  const auto n = map.nodes_.size();

  map.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!map.index_.emplace(map.nodes_[i].id, i).second) {
      throw Error(ErrorKind::DuplicateId, "duplicate node id '" + map.nodes_[i].id + "'");
    }
  }

  map.parent_.assign(n, std::nullopt);
  map.children_.assign(n, {});
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& parent = map.nodes_[i].parent;
    if (!parent) {
      roots.push_back(i);
      continue;
    }
    auto it = map.index_.find(*parent);
    if (it == map.index_.end()) {
      throw Error(ErrorKind::UnknownParent,
                  "node '" + map.nodes_[i].id + "' names unknown parent '" + *parent + "'");
    }
    map.parent_[i] = it->second;
    map.children_[it->second].push_back(i);
  }

  // Walk parent chains; 0 = unvisited, 1 = on the current chain, 2 = reaches a root.
  std::vector<char> state(n, 0);
  std::vector<std::size_t> chain;
  for (std::size_t start = 0; start < n; ++start) {
    chain.clear();
    std::optional<std::size_t> cur = start;
    while (cur && state[*cur] == 0) {
      state[*cur] = 1;
      chain.push_back(*cur);
      cur = map.parent_[*cur];
    }
    if (cur && state[*cur] == 1) {
      throw Error(ErrorKind::Cycle, "parent cycle through node '" + map.nodes_[*cur].id + "'");
    }
    for (auto i : chain) state[i] = 2;
  }

  if (roots.size() != 1) {
    if (roots.empty()) throw Error(ErrorKind::Structure, "map has no root node");
    throw Error(ErrorKind::Structure,
                "map has " + std::to_string(roots.size()) + " root nodes ('" +
                    map.nodes_[roots[0]].id + "', '" + map.nodes_[roots[1]].id + "', ...)");
  }
  map.root_ = roots.front();
  return map;
}

std::vector<int> compute_levels(const ConceptMap& map) {
  std::vector<int> levels(map.size(), -1);
  if (map.size() == 0) return levels;
  std::vector<std::size_t> stack{map.root_index()};
  levels[map.root_index()] = 0;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (auto c : map.children(i)) {
      levels[c] = levels[i] + 1;
      stack.push_back(c);
    }
  }
  return levels;
}

std::string_view to_string(NodeColor color) noexcept {
  return color == NodeColor::Green ? "green" : "red";
}

IntegratedMap::IntegratedMap(ConceptMap tree, std::vector<std::optional<NodeColor>> colors)
    : tree_(std::move(tree)), colors_(std::move(colors)), levels_(compute_levels(tree_)) {
  if (colors_.size() != tree_.size()) {
    throw Error(ErrorKind::Structure, "color table does not match the node count");
  }
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    const bool is_root = i == tree_.root_index();
    if (is_root == colors_[i].has_value()) {
      throw Error(ErrorKind::Structure, is_root ? "root node must not be colored"
                                                : "node '" + id(i) + "' has no color");
    }
  }
  depth_ = levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end());
}

IntegratedMap integrate(const ConceptMap& teacher, const ConceptMap& student) {
  if (teacher.root() != student.root()) {
    throw Error(ErrorKind::RootMismatch,
                "teacher root '" + teacher.root() + "' differs from student root '" + student.root() + "'");
  }

  auto consistent_in = [](const ConceptMap& map, const RawNode& node) {
    auto idx = map.index_of(node.id);
    return idx && map.nodes()[*idx].parent == node.parent;
  };

  std::vector<RawNode> nodes;
  std::vector<std::optional<NodeColor>> colors;
  nodes.reserve(teacher.size() + student.size());
  for (const auto& node : teacher.nodes()) {
    nodes.push_back(node);
    if (!node.parent) {
      colors.push_back(std::nullopt);
    } else {
      colors.push_back(consistent_in(student, node) ? NodeColor::Green : NodeColor::Red);
    }
  }
  for (const auto& node : student.nodes()) {
    if (teacher.contains(node.id)) continue;
    // Student-only nodes hang under their declared parent, which must exist
    // somewhere in the merged tree.
    if (!teacher.contains(*node.parent) && !student.contains(*node.parent)) {
      throw Error(ErrorKind::Orphan,
                  "student node '" + node.id + "' has parent '" + *node.parent + "' in neither map");
    }
    nodes.push_back(node);
    colors.push_back(NodeColor::Green);
  }

  return IntegratedMap(validate_map(teacher.subject(), std::move(nodes)), std::move(colors));
}

}  // namespace roughmap
