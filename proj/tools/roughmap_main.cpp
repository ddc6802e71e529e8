// roughmap: compare student concept maps against a teacher map.
//
//   roughmap analyze --teacher T.json --student S.json [--format text|csv|json]
//                    [--order asc|desc] [--levels deepest|all] [--out PATH]
//   roughmap batch   --teacher T.json --roster roster.csv [--maps-dir DIR]
//                    [--out-dir DIR] [--format ...] [--order ...] [--levels ...]
//   roughmap validate MAP.json
//
// Exit status: 0 success, 1 validation or analysis error, 2 I/O or parse error.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "roughmap/error.hpp"
#include "roughmap/runner.hpp"

namespace {

struct Common {
  std::string teacher;
  std::string format = "text";
  std::string order = "asc";
  std::string levels = "deepest";
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--teacher", common.teacher, "Teacher (reference) concept map")->required();
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--order", common.order, "Remediation order by importance degree")
      ->check(CLI::IsMember({"asc", "desc"}));
  cmd->add_option("--levels", common.levels, "Boundary sets to process")
      ->check(CLI::IsMember({"deepest", "all"}));
}

roughmap::RunConfig make_config(const Common& common) {
  roughmap::RunConfig config;
  config.teacher_map = common.teacher;
  config.format = roughmap::parse_report_format(common.format);
  config.order = roughmap::parse_sort_order(common.order);
  config.levels = common.levels == "all" ? roughmap::LevelsMode::AllLevels : roughmap::LevelsMode::DeepestOnly;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough-set knowledge-gap analysis of student concept maps"};
  app.require_subcommand(1);

  Common common;

  auto* analyze = app.add_subcommand("analyze", "Analyze one student map");
  add_common(analyze, common);
  std::string student;
  std::string out;
  analyze->add_option("--student", student, "Student concept map")->required();
  analyze->add_option("--out", out, "Write the report here instead of stdout");

  auto* batch = app.add_subcommand("batch", "Analyze every student on a roster");
  add_common(batch, common);
  std::string roster;
  std::string maps_dir;
  std::string out_dir = ".";
  unsigned jobs = 0;
  batch->add_option("--roster", roster, "Roster CSV")->required();
  batch->add_option("--maps-dir", maps_dir, "Base directory for relative map paths (default: roster directory)");
  batch->add_option("--out-dir", out_dir, "Directory for per-student reports and cohort_summary.csv");
  batch->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  auto* validate = app.add_subcommand("validate", "Check that a concept map file is a valid rooted tree");
  std::string map_path;
  validate->add_option("map", map_path, "Concept map file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : roughmap::kExitIoError;
  }

  if (*validate) return roughmap::run_validate(map_path, std::cout, std::cerr);

  roughmap::RunConfig config = make_config(common);
  if (*analyze) {
    roughmap::SingleRun single{student, std::nullopt};
    if (!out.empty()) single.out = out;
    config.mode = single;
  } else {
    roughmap::BatchRun run;
    run.roster = roster;
    if (!maps_dir.empty()) run.maps_dir = maps_dir;
    run.out_dir = out_dir;
    run.jobs = jobs;
    config.mode = run;
  }
  return roughmap::run_analyze(config, std::cout, std::cerr);
}
