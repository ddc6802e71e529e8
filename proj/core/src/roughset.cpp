#include "roughmap/roughset.hpp"

#include <map>

#include "roughmap/error.hpp"

namespace roughmap {

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw Error(ErrorKind::DuplicateId, "duplicate universe element '" + elements_[i] + "'");
    }
  }
}

std::optional<std::size_t> Universe::index_of(const std::string& id) const {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<bool> Universe::mask_of(std::span<const std::string> subset) const {
  std::vector<bool> mask(elements_.size(), false);
  for (const auto& id : subset) {
    auto it = index_.find(id);
    if (it == index_.end()) {
      throw Error(ErrorKind::InvalidSubset, "element '" + id + "' is not in the universe");
    }
    mask[it->second] = true;
  }
  return mask;
}

ElementSet Universe::from_mask(const std::vector<bool>& mask) const {
  ElementSet out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(elements_[i]);
  }
  return out;
}

ApproximationSpace::ApproximationSpace(Universe universe, Partition partition)
    : universe_(std::move(universe)), partition_(std::move(partition)) {
  std::vector<bool> seen(universe_.size(), false);
  std::size_t covered = 0;
  block_members_.reserve(partition_.blocks.size());
  for (const auto& block : partition_.blocks) {
    if (block.empty()) throw Error(ErrorKind::InvalidPartition, "partition has an empty block");
    std::vector<std::size_t> members;
    members.reserve(block.size());
    for (const auto& id : block) {
      auto idx = universe_.index_of(id);
      if (!idx) {
        throw Error(ErrorKind::InvalidPartition, "block element '" + id + "' is not in the universe");
      }
      if (seen[*idx]) {
        throw Error(ErrorKind::InvalidPartition, "element '" + id + "' appears in more than one block");
      }
      seen[*idx] = true;
      ++covered;
      members.push_back(*idx);
    }
    block_members_.push_back(std::move(members));
  }
  if (covered != universe_.size()) {
    throw Error(ErrorKind::InvalidPartition, "partition does not cover the universe");
  }
}

ApproximationSpace::Masks ApproximationSpace::approximate_masks(std::span<const std::string> a) const {
  const auto in_a = universe_.mask_of(a);
  Masks masks{std::vector<bool>(universe_.size(), false), std::vector<bool>(universe_.size(), false)};
  for (const auto& members : block_members_) {
    bool all = true;
    bool any = false;
    for (auto i : members) {
      all = all && in_a[i];
      any = any || in_a[i];
    }
    for (auto i : members) {
      if (all) masks.lower[i] = true;
      if (any) masks.upper[i] = true;
    }
  }
  return masks;
}

ElementSet ApproximationSpace::lower_approximation(std::span<const std::string> a) const {
  return universe_.from_mask(approximate_masks(a).lower);
}

ElementSet ApproximationSpace::upper_approximation(std::span<const std::string> a) const {
  return universe_.from_mask(approximate_masks(a).upper);
}

ElementSet ApproximationSpace::boundary(std::span<const std::string> a) const {
  auto m = approximate_masks(a);
  std::vector<bool> bnd(universe_.size());
  for (std::size_t i = 0; i < bnd.size(); ++i) bnd[i] = m.upper[i] && !m.lower[i];
  return universe_.from_mask(bnd);
}

RoughSet ApproximationSpace::approximate(std::span<const std::string> a) const {
  auto m = approximate_masks(a);
  return {universe_.from_mask(m.lower), universe_.from_mask(m.upper)};
}

Regions ApproximationSpace::regions(std::span<const std::string> a) const {
  auto m = approximate_masks(a);
  Regions r;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (m.lower[i]) {
      r.pos.push_back(universe_[i]);
    } else if (m.upper[i]) {
      r.bnd.push_back(universe_[i]);
    } else {
      r.neg.push_back(universe_[i]);
    }
  }
  return r;
}

bool ApproximationSpace::is_exact(std::span<const std::string> a) const {
  auto m = approximate_masks(a);
  return m.lower == m.upper;
}

DecisionTable::DecisionTable(Universe objects, std::vector<std::string> attributes,
                             std::vector<std::vector<std::string>> values,
                             std::vector<std::string> condition, std::vector<std::string> decision)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      values_(std::move(values)),
      condition_(std::move(condition)),
      decision_(std::move(decision)) {
  {
    Universe names(attributes_);  // rejects duplicate attribute names
    (void)names;
  }
  if (values_.size() != objects_.size()) {
    throw Error(ErrorKind::Schema, "decision table has " + std::to_string(values_.size()) +
                                       " value rows for " + std::to_string(objects_.size()) + " objects");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].size() != attributes_.size()) {
      throw Error(ErrorKind::Schema, "object '" + objects_[i] + "' does not define every attribute");
    }
  }
  for (const auto& a : condition_) attribute_index(a);
  for (const auto& a : decision_) attribute_index(a);
}

std::size_t DecisionTable::attribute_index(const std::string& attribute) const {
  for (std::size_t j = 0; j < attributes_.size(); ++j) {
    if (attributes_[j] == attribute) return j;
  }
  throw Error(ErrorKind::UnknownAttribute, "unknown attribute '" + attribute + "'");
}

const std::string& DecisionTable::value(const std::string& object, const std::string& attribute) const {
  auto i = objects_.index_of(object);
  if (!i) throw Error(ErrorKind::InvalidSubset, "unknown object '" + object + "'");
  return values_[*i][attribute_index(attribute)];
}

Partition indiscernibility(const DecisionTable& table, std::span<const std::string> p) {
  std::vector<std::size_t> columns;
  columns.reserve(p.size());
  for (const auto& a : p) columns.push_back(table.attribute_index(a));

  std::map<std::vector<std::string>, std::size_t> block_of;
  Partition out;
  const auto& objects = table.objects();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    std::vector<std::string> key;
    key.reserve(columns.size());
    for (auto j : columns) key.push_back(table.value(i, j));
    auto [it, inserted] = block_of.emplace(std::move(key), out.blocks.size());
    if (inserted) out.blocks.emplace_back();
    out.blocks[it->second].push_back(objects[i]);
  }
  return out;
}

}  // namespace roughmap
