#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <variant>

#include "roughmap/gap_analysis.hpp"
#include "roughmap/grading.hpp"
#include "roughmap/report.hpp"

namespace roughmap {

struct SingleRun {
  std::filesystem::path student_map;
  std::optional<std::filesystem::path> out;  // stdout when empty
};

struct BatchRun {
  std::filesystem::path roster;
  std::optional<std::filesystem::path> maps_dir;  // defaults to the roster's directory
  std::filesystem::path out_dir = ".";
  unsigned jobs = 0;  // 0 = hardware concurrency
};

struct RunConfig {
  std::filesystem::path teacher_map;
  std::variant<SingleRun, BatchRun> mode;
  ReportFormat format = ReportFormat::Text;
  SortOrder order = SortOrder::Ascending;
  LevelsMode levels = LevelsMode::DeepestOnly;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAnalysisError = 1;
inline constexpr int kExitIoError = 2;

/// Full pipeline for one student map against a teacher map.
Report analyze_maps(const ConceptMap& teacher, const ConceptMap& student, LevelsMode levels,
                    SortOrder order);

/// Runs the configured mode. Errors become a one-line diagnostic on `err` and
/// a nonzero exit code; batch mode writes nothing unless every student succeeds.
int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Exit 0 iff the map at `path` parses and validates.
int run_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

}  // namespace roughmap
