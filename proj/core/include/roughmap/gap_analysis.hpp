#pragma once

#include <string>
#include <vector>

#include "roughmap/concept_map.hpp"
#include "roughmap/rational.hpp"

namespace roughmap {

/// Region sets for one level: green and red nodes at `level`, and their
/// parents (at `level - 1`) as the boundary set. Sets follow map order.
struct LevelRegions {
  int level = 0;
  std::vector<std::string> pos;
  std::vector<std::string> neg;
  std::vector<std::string> bnd;

  friend bool operator==(const LevelRegions&, const LevelRegions&) = default;
};

struct ImportanceRecord {
  std::string node;
  int level = 0;  // the node's own level
  int child_count = 0;
  int overlap = 0;  // children in the next level's positive region
  Rational alpha;

  friend bool operator==(const ImportanceRecord&, const ImportanceRecord&) = default;
};

enum class LevelsMode { DeepestOnly, AllLevels };

struct AnalysisResult {
  std::vector<LevelRegions> regions;  // deepest level first
  std::vector<ImportanceRecord> records;
  Rational total;            // sum of alphas truncated at two decimals
  Rational expected_result;  // total / records.size(), zero when there are no records

  friend bool operator==(const AnalysisResult&, const AnalysisResult&) = default;
};

inline constexpr int kAlphaDisplayPlaces = 2;

/// Alpha as used for display and for the expected-result sum.
Rational truncated_alpha(const ImportanceRecord& record);

/// Throws ErrorKind::NothingToAnalyze for a single-node map.
std::vector<LevelRegions> level_regions(const IntegratedMap& map);

/// Throws ErrorKind::NoChildren for a leaf and ErrorKind::LevelMismatch when
/// `child_regions` is not the level directly below `node`.
ImportanceRecord importance_degree(const std::string& node, const IntegratedMap& map,
                                   const LevelRegions& child_regions);

AnalysisResult analyze(const IntegratedMap& map, LevelsMode mode = LevelsMode::DeepestOnly);

}  // namespace roughmap
