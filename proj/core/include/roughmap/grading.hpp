#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roughmap/gap_analysis.hpp"
#include "roughmap/rational.hpp"

namespace roughmap {

enum class Grade { A, B, C };

std::string_view to_string(Grade grade) noexcept;
Grade parse_grade(std::string_view text);

struct GradeBand {
  Grade grade;
  int lower_bound_percent;  // inclusive
};

/// A: [75, 100], B: [50, 75), C: [0, 50). Highest band first.
inline constexpr GradeBand kGradeBands[] = {
    {Grade::A, 75},
    {Grade::B, 50},
    {Grade::C, 0},
};

/// Throws ErrorKind::Range outside [0, 100].
Grade assign_grade(int actual_percent);

inline constexpr int kExpectedPercent = 100;

struct GradedRecord {
  std::string node;
  int expected_percent = kExpectedPercent;
  int actual_percent = 0;
  Grade grade = Grade::C;

  friend bool operator==(const GradedRecord&, const GradedRecord&) = default;
};

/// trunc(alpha * 100)
int actual_percent(const Rational& alpha);

std::vector<GradedRecord> grade_records(std::span<const ImportanceRecord> records);

enum class SortOrder { Ascending, Descending };

std::string_view to_string(SortOrder order) noexcept;
SortOrder parse_sort_order(std::string_view text);

struct RemediationEntry {
  std::string node;
  Rational alpha;

  friend bool operator==(const RemediationEntry&, const RemediationEntry&) = default;
};

struct RemediationPlan {
  SortOrder order = SortOrder::Ascending;
  std::vector<RemediationEntry> entries;

  friend bool operator==(const RemediationPlan&, const RemediationPlan&) = default;
};

/// Drops fully known nodes (alpha == 1) and sorts the rest by alpha; equal
/// alphas are ordered by node id in both directions.
RemediationPlan remediation_sequence(std::span<const ImportanceRecord> records, SortOrder order);

}  // namespace roughmap
