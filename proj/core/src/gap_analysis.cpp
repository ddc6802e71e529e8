#include "roughmap/gap_analysis.hpp"

#include <algorithm>
#include <unordered_set>

#include "roughmap/error.hpp"

namespace roughmap {

Rational truncated_alpha(const ImportanceRecord& record) {
  return truncate_decimal(record.alpha, kAlphaDisplayPlaces);
}

std::vector<LevelRegions> level_regions(const IntegratedMap& map) {
  if (map.depth() < 1) {
    throw Error(ErrorKind::NothingToAnalyze, "map '" + map.subject() + "' has no nodes below the root");
  }
  const auto& tree = map.tree();
  std::vector<std::vector<std::size_t>> by_level(static_cast<std::size_t>(map.depth()) + 1);
  for (std::size_t i = 0; i < map.size(); ++i) by_level[static_cast<std::size_t>(map.level(i))].push_back(i);

  std::vector<LevelRegions> out;
  out.reserve(static_cast<std::size_t>(map.depth()));
  for (int level = map.depth(); level >= 1; --level) {
    LevelRegions r;
    r.level = level;
    std::vector<std::size_t> parents;
    for (auto i : by_level[static_cast<std::size_t>(level)]) {
      (map.color(i) == NodeColor::Green ? r.pos : r.neg).push_back(map.id(i));
      parents.push_back(*tree.parent_index(i));
    }
    // Map order, one entry per parent.
    std::sort(parents.begin(), parents.end());
    parents.erase(std::unique(parents.begin(), parents.end()), parents.end());
    for (auto p : parents) r.bnd.push_back(map.id(p));
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

using PositiveSet = std::unordered_set<std::string>;

ImportanceRecord importance_of(std::size_t index, const IntegratedMap& map, const LevelRegions& child_regions,
                               const PositiveSet& positive) {
  const auto& node = map.id(index);
  const auto& children = map.tree().children(index);
  if (children.empty()) {
    throw Error(ErrorKind::NoChildren, "node '" + node + "' is a leaf and has no importance degree");
  }
  const int level = map.level(index);
  if (child_regions.level != level + 1) {
    throw Error(ErrorKind::LevelMismatch, "node '" + node + "' is at level " + std::to_string(level) +
                                              " but regions are for level " +
                                              std::to_string(child_regions.level));
  }
  int overlap = 0;
  for (auto c : children) {
    if (positive.contains(map.id(c))) ++overlap;
  }
  const int count = static_cast<int>(children.size());
  return ImportanceRecord{node, level, count, overlap, Rational(overlap, count)};
}

}  // namespace

ImportanceRecord importance_degree(const std::string& node, const IntegratedMap& map,
                                   const LevelRegions& child_regions) {
  auto idx = map.tree().index_of(node);
  if (!idx) throw Error(ErrorKind::UnknownParent, "no node '" + node + "' in integrated map");
  const PositiveSet positive(child_regions.pos.begin(), child_regions.pos.end());
  return importance_of(*idx, map, child_regions, positive);
}

AnalysisResult analyze(const IntegratedMap& map, LevelsMode mode) {
  AnalysisResult result;
  result.regions = level_regions(map);

  const std::size_t processed = mode == LevelsMode::DeepestOnly ? 1 : result.regions.size();
  for (std::size_t k = 0; k < processed; ++k) {
    const auto& regions = result.regions[k];
    const PositiveSet positive(regions.pos.begin(), regions.pos.end());
    for (const auto& parent : regions.bnd) {
      result.records.push_back(importance_of(*map.tree().index_of(parent), map, regions, positive));
    }
  }

  for (const auto& record : result.records) result.total += truncated_alpha(record);
  if (!result.records.empty()) {
    result.expected_result = result.total / static_cast<std::int64_t>(result.records.size());
  }
  return result;
}

}  // namespace roughmap
