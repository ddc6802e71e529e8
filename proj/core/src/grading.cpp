#include "roughmap/grading.hpp"

#include <algorithm>

#include "roughmap/error.hpp"

namespace roughmap {

std::string_view to_string(Grade grade) noexcept {
  switch (grade) {
    case Grade::A: return "A";
    case Grade::B: return "B";
    case Grade::C: return "C";
  }
  return "?";
}

Grade parse_grade(std::string_view text) {
  if (text == "A") return Grade::A;
  if (text == "B") return Grade::B;
  if (text == "C") return Grade::C;
  throw Error(ErrorKind::Parse, "unknown grade '" + std::string(text) + "'");
}

Grade assign_grade(int actual_percent) {
  if (actual_percent < 0 || actual_percent > 100) {
    throw Error(ErrorKind::Range, "percent " + std::to_string(actual_percent) + " outside [0, 100]");
  }
  for (const auto& band : kGradeBands) {
    if (actual_percent >= band.lower_bound_percent) return band.grade;
  }
  return Grade::C;
}

int actual_percent(const Rational& alpha) {
  return static_cast<int>(alpha.numerator() * 100 / alpha.denominator());
}

std::vector<GradedRecord> grade_records(std::span<const ImportanceRecord> records) {
  std::vector<GradedRecord> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    const int percent = actual_percent(r.alpha);
    out.push_back(GradedRecord{r.node, kExpectedPercent, percent, assign_grade(percent)});
  }
  return out;
}

std::string_view to_string(SortOrder order) noexcept {
  return order == SortOrder::Ascending ? "ascending" : "descending";
}

SortOrder parse_sort_order(std::string_view text) {
  if (text == "asc" || text == "ascending") return SortOrder::Ascending;
  if (text == "desc" || text == "descending") return SortOrder::Descending;
  throw Error(ErrorKind::Format, "unknown order '" + std::string(text) + "' (expected asc or desc)");
}

RemediationPlan remediation_sequence(std::span<const ImportanceRecord> records, SortOrder order) {
  RemediationPlan plan;
  plan.order = order;
  for (const auto& r : records) {
    if (r.alpha < Rational(1)) plan.entries.push_back({r.node, r.alpha});
  }
  std::sort(plan.entries.begin(), plan.entries.end(),
            [order](const RemediationEntry& a, const RemediationEntry& b) {
              if (a.alpha != b.alpha) {
                return order == SortOrder::Ascending ? a.alpha < b.alpha : a.alpha > b.alpha;
              }
              return a.node < b.node;
            });
  return plan;
}

}  // namespace roughmap
