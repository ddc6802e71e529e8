#include "roughmap/runner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "roughmap/error.hpp"
#include "roughmap/map_io.hpp"
#include "roughmap/roster.hpp"

namespace roughmap {
namespace {

constexpr const char* kSummaryFile = "cohort_summary.csv";

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << contents;
  if (!out.flush()) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

struct StudentOutcome {
  std::string report;
  std::string expected_result;
  std::string grades;
  std::optional<Error> error;
};

std::string grade_summary(const std::vector<GradedRecord>& graded) {
  std::string out;
  for (const auto& g : graded) {
    if (!out.empty()) out += ';';
    out += g.node + ":" + std::string(to_string(g.grade));
  }
  return out;
}

std::filesystem::path resolve_map_path(const RosterRecord& record, const BatchRun& batch) {
  if (record.map_path.is_absolute()) return record.map_path;
  const auto base = batch.maps_dir ? *batch.maps_dir : batch.roster.parent_path();
  return base / record.map_path;
}

int run_single(const RunConfig& config, const SingleRun& single, std::ostream& out) {
  const auto teacher = parse_concept_map_file(config.teacher_map);
  const auto student = parse_concept_map_file(single.student_map);
  const auto report = analyze_maps(teacher, student, config.levels, config.order);
  const auto text = render_report(report, config.format);
  if (single.out) {
    write_file(*single.out, text);
  } else {
    out << text;
  }
  return kExitOk;
}

int run_batch(const RunConfig& config, const BatchRun& batch, std::ostream& err) {
  const auto teacher = parse_concept_map_file(config.teacher_map);
  const auto roster = parse_roster(batch.roster);

  std::vector<StudentOutcome> outcomes(roster.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < roster.size(); i = next++) {
      auto& outcome = outcomes[i];
      const auto path = resolve_map_path(roster[i], batch);
      try {
        const auto student = parse_concept_map_file(path);
        const auto report = analyze_maps(teacher, student, config.levels, config.order);
        outcome.report = render_report(report, config.format);
        outcome.expected_result =
            report.analysis.records.empty() ? "" : format_decimal(report.analysis.expected_result, 4);
        outcome.grades = grade_summary(report.graded);
      } catch (const Error& e) {
        outcome.error = Error(e.kind(), "student '" + roster[i].register_no + "' (map '" + path.string() +
                                            "'): " + e.what());
      }
    }
  };

  unsigned jobs = batch.jobs ? batch.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(roster.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  for (const auto& outcome : outcomes) {
    if (outcome.error) throw *outcome.error;
  }

  std::error_code ec;
  std::filesystem::create_directories(batch.out_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create output directory '" + batch.out_dir.string() + "'");

  std::ostringstream summary;
  summary << "register_no,name,department,semester,subject,expected_result,grades\n";
  for (std::size_t i = 0; i < roster.size(); ++i) {
    const auto& r = roster[i];
    write_file(batch.out_dir / (r.register_no + "." + std::string(extension_for(config.format))),
               outcomes[i].report);
    summary << csv_escape(r.register_no) << ',' << csv_escape(r.name) << ',' << csv_escape(r.department) << ','
            << csv_escape(r.semester) << ',' << csv_escape(r.subject) << ',' << outcomes[i].expected_result
            << ',' << csv_escape(outcomes[i].grades) << '\n';
  }
  write_file(batch.out_dir / kSummaryFile, summary.str());
  err << "wrote " << roster.size() << " report(s) and " << kSummaryFile << " to " << batch.out_dir.string()
      << '\n';
  return kExitOk;
}

}  // namespace

Report analyze_maps(const ConceptMap& teacher, const ConceptMap& student, LevelsMode levels, SortOrder order) {
  return build_report(analyze(integrate(teacher, student), levels), order);
}

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (const auto* single = std::get_if<SingleRun>(&config.mode)) return run_single(config, *single, out);
    return run_batch(config, std::get<BatchRun>(config.mode), err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: io: " << e.what() << '\n';
    return kExitIoError;
  }
}

int run_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  try {
    const auto map = parse_concept_map_file(path);
    const auto levels = compute_levels(map);
    const int depth = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
    out << path.string() << ": ok (" << map.size() << " nodes, root " << map.root() << ", depth " << depth
        << ")\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace roughmap
