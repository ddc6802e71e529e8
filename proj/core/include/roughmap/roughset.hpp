#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace roughmap {

/// Element sets are reported in universe insertion order.
using ElementSet = std::vector<std::string>;

class Universe {
 public:
  Universe() = default;
  /// Throws ErrorKind::DuplicateId on a repeated identifier.
  explicit Universe(std::vector<std::string> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const std::string& id) const;
  bool contains(const std::string& id) const { return index_.contains(id); }

  /// Membership mask of `subset`; throws ErrorKind::InvalidSubset for foreign elements.
  std::vector<bool> mask_of(std::span<const std::string> subset) const;
  ElementSet from_mask(const std::vector<bool>& mask) const;

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Partition {
  std::vector<std::vector<std::string>> blocks;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct RoughSet {
  ElementSet lower;
  ElementSet upper;

  friend bool operator==(const RoughSet&, const RoughSet&) = default;
};

struct Regions {
  ElementSet pos;
  ElementSet neg;
  ElementSet bnd;

  friend bool operator==(const Regions&, const Regions&) = default;
};

/// A finite universe with a partition into equivalence classes.
class ApproximationSpace {
 public:
  /// Throws ErrorKind::InvalidPartition unless the blocks are non-empty,
  /// pairwise disjoint and cover the universe exactly.
  ApproximationSpace(Universe universe, Partition partition);

  const Universe& universe() const noexcept { return universe_; }
  const Partition& partition() const noexcept { return partition_; }
  std::size_t block_count() const noexcept { return block_members_.size(); }

  ElementSet lower_approximation(std::span<const std::string> a) const;
  ElementSet upper_approximation(std::span<const std::string> a) const;
  ElementSet boundary(std::span<const std::string> a) const;
  RoughSet approximate(std::span<const std::string> a) const;
  Regions regions(std::span<const std::string> a) const;
  bool is_exact(std::span<const std::string> a) const;

 private:
  struct Masks {
    std::vector<bool> lower;
    std::vector<bool> upper;
  };
  Masks approximate_masks(std::span<const std::string> a) const;

  Universe universe_;
  Partition partition_;
  // Block members as universe indices, parallel to partition_.blocks.
  std::vector<std::vector<std::size_t>> block_members_;
};

class DecisionTable {
 public:
  /// `values[i][j]` is the value of attribute j on object i.
  /// Throws ErrorKind::UnknownAttribute if condition/decision name a foreign
  /// attribute, ErrorKind::Schema if a row is not total.
  DecisionTable(Universe objects, std::vector<std::string> attributes,
                std::vector<std::vector<std::string>> values,
                std::vector<std::string> condition, std::vector<std::string> decision);

  const Universe& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  const std::vector<std::string>& condition() const noexcept { return condition_; }
  const std::vector<std::string>& decision() const noexcept { return decision_; }

  const std::string& value(std::size_t object, std::size_t attribute) const {
    return values_[object][attribute];
  }
  const std::string& value(const std::string& object, const std::string& attribute) const;
  std::size_t attribute_index(const std::string& attribute) const;

 private:
  Universe objects_;
  std::vector<std::string> attributes_;
  std::vector<std::vector<std::string>> values_;
  std::vector<std::string> condition_;
  std::vector<std::string> decision_;
};

/// IND(P): maximal groups of objects agreeing on every attribute in `p`.
/// Blocks appear in order of their first object; IND of the empty set is one block.
Partition indiscernibility(const DecisionTable& table, std::span<const std::string> p);

}  // namespace roughmap
