#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roughmap/gap_analysis.hpp"
#include "roughmap/grading.hpp"

namespace roughmap {

enum class ReportFormat { Text, Csv, Json };

std::string_view to_string(ReportFormat format) noexcept;
/// Throws ErrorKind::Format for anything other than text, csv or json.
ReportFormat parse_report_format(std::string_view text);
/// File extension for per-student reports ("txt", "csv", "json").
std::string_view extension_for(ReportFormat format) noexcept;

struct Report {
  AnalysisResult analysis;
  std::vector<GradedRecord> graded;
  RemediationPlan plan;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Runs grading and remediation over an analysis.
Report build_report(AnalysisResult analysis, SortOrder order);

std::string render_report(const AnalysisResult& result, const std::vector<GradedRecord>& graded,
                          const RemediationPlan& plan, ReportFormat format);
std::string render_report(const Report& report, ReportFormat format);

/// Reads back the JSON rendering. Throws ErrorKind::Parse or ErrorKind::Schema.
Report parse_json_report(std::string_view document);

}  // namespace roughmap
