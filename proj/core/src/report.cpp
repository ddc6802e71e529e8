#include "roughmap/report.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "roughmap/error.hpp"
#include "roughmap/roster.hpp"

namespace roughmap {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExpectedResultPlaces = 4;

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out.empty() ? "-" : out;
}

// Left-aligned table with two spaces between columns; no trailing blanks.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line.append(width[c] - display_width(row[c]) + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  // Counts code points, so the "∩" in a header does not skew alignment.
  static std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
  }

  std::vector<std::vector<std::string>> rows_;
};

std::string alpha_cell(const ImportanceRecord& r) {
  return std::to_string(r.overlap) + "/" + std::to_string(r.child_count) + "=" +
         format_decimal(r.alpha, kAlphaDisplayPlaces);
}

std::string render_text(const AnalysisResult& result, const std::vector<GradedRecord>& graded,
                        const RemediationPlan& plan) {
  std::ostringstream os;

  os << "REGION SETS\n";
  TextTable regions({"LEVEL", "POS", "NEG", "BND"});
  for (const auto& r : result.regions) {
    regions.add({std::to_string(r.level), join(r.pos), join(r.neg), join(r.bnd)});
  }
  regions.write(os);

  os << "\nIMPORTANCE DEGREES\n";
  TextTable importance({"BND SET", "LEVEL", "|CHILDREN|", "|CHILDREN ∩ POS|", "ALPHA"});
  for (const auto& r : result.records) {
    importance.add({r.node, std::to_string(r.level + 1), std::to_string(r.child_count),
                    std::to_string(r.overlap), alpha_cell(r)});
  }
  importance.write(os);
  if (!result.records.empty()) {
    os << "Expected result = total/size = " << format_decimal(result.total, kAlphaDisplayPlaces) << "/"
       << result.records.size() << " = " << format_decimal(result.expected_result, kExpectedResultPlaces)
       << '\n';
  }

  os << "\nGRADES\n";
  TextTable grades({"BND SET", "EXPECTED RESULT (%)", "ACTUAL RESULT (%)", "GRADE"});
  for (const auto& g : graded) {
    grades.add({g.node, std::to_string(g.expected_percent), std::to_string(g.actual_percent),
                std::string(to_string(g.grade))});
  }
  grades.write(os);

  os << "\nREMEDIATION ORDER (" << to_string(plan.order) << ")\n";
  TextTable remediation({"RANK", "NODE", "ALPHA"});
  for (std::size_t i = 0; i < plan.entries.size(); ++i) {
    remediation.add({std::to_string(i + 1), plan.entries[i].node,
                     format_decimal(plan.entries[i].alpha, kAlphaDisplayPlaces)});
  }
  remediation.write(os);
  return os.str();
}

std::string render_csv(const AnalysisResult& result, const std::vector<GradedRecord>& graded,
                       const RemediationPlan& plan) {
  std::unordered_map<std::string, const GradedRecord*> grade_of;
  for (const auto& g : graded) grade_of.emplace(g.node, &g);
  std::unordered_map<std::string, std::size_t> rank_of;
  for (std::size_t i = 0; i < plan.entries.size(); ++i) rank_of.emplace(plan.entries[i].node, i + 1);

  std::ostringstream os;
  os << "node,bnd_level,child_count,overlap,alpha,expected_percent,actual_percent,grade,remediation_rank\n";
  for (const auto& r : result.records) {
    os << csv_escape(r.node) << ',' << r.level + 1 << ',' << r.child_count << ',' << r.overlap << ','
       << format_decimal(r.alpha, kAlphaDisplayPlaces) << ',';
    if (auto it = grade_of.find(r.node); it != grade_of.end()) {
      os << it->second->expected_percent << ',' << it->second->actual_percent << ','
         << to_string(it->second->grade);
    } else {
      os << ",,";
    }
    os << ',';
    if (auto it = rank_of.find(r.node); it != rank_of.end()) os << it->second;
    os << '\n';
  }
  if (!result.records.empty()) {
    os << "total," << format_decimal(result.total, kAlphaDisplayPlaces) << '\n';
    os << "size," << result.records.size() << '\n';
    os << "expected_result," << format_decimal(result.expected_result, kExpectedResultPlaces) << '\n';
  }
  return os.str();
}

std::string render_json(const AnalysisResult& result, const std::vector<GradedRecord>& graded,
                        const RemediationPlan& plan) {
  ordered_json doc;
  doc["regions"] = ordered_json::array();
  for (const auto& r : result.regions) {
    doc["regions"].push_back({{"level", r.level}, {"pos", r.pos}, {"neg", r.neg}, {"bnd", r.bnd}});
  }
  doc["records"] = ordered_json::array();
  for (const auto& r : result.records) {
    doc["records"].push_back({{"node", r.node},
                              {"level", r.level},
                              {"child_count", r.child_count},
                              {"overlap", r.overlap},
                              {"alpha", format_fraction(r.alpha)},
                              {"alpha_truncated", format_decimal(r.alpha, kAlphaDisplayPlaces)}});
  }
  doc["size"] = result.records.size();
  doc["total"] = format_decimal(result.total, kAlphaDisplayPlaces);
  if (result.records.empty()) {
    doc["expected_result"] = nullptr;
    doc["expected_result_exact"] = nullptr;
  } else {
    doc["expected_result"] = format_decimal(result.expected_result, kExpectedResultPlaces);
    doc["expected_result_exact"] = format_fraction(result.expected_result);
  }
  doc["graded"] = ordered_json::array();
  for (const auto& g : graded) {
    doc["graded"].push_back({{"node", g.node},
                             {"expected_percent", g.expected_percent},
                             {"actual_percent", g.actual_percent},
                             {"grade", to_string(g.grade)}});
  }
  ordered_json entries = ordered_json::array();
  for (const auto& e : plan.entries) {
    entries.push_back({{"node", e.node},
                       {"alpha", format_fraction(e.alpha)},
                       {"alpha_truncated", format_decimal(e.alpha, kAlphaDisplayPlaces)}});
  }
  doc["remediation"] = {{"order", to_string(plan.order)}, {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string_view to_string(ReportFormat format) noexcept {
  switch (format) {
    case ReportFormat::Text: return "text";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
  }
  return "text";
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::Text;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw Error(ErrorKind::Format, "unknown report format '" + std::string(text) + "' (expected text, csv or json)");
}

std::string_view extension_for(ReportFormat format) noexcept {
  switch (format) {
    case ReportFormat::Text: return "txt";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
  }
  return "txt";
}

Report build_report(AnalysisResult analysis, SortOrder order) {
  Report report;
  report.graded = grade_records(analysis.records);
  report.plan = remediation_sequence(analysis.records, order);
  report.analysis = std::move(analysis);
  return report;
}

std::string render_report(const AnalysisResult& result, const std::vector<GradedRecord>& graded,
                          const RemediationPlan& plan, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return render_text(result, graded, plan);
    case ReportFormat::Csv: return render_csv(result, graded, plan);
    case ReportFormat::Json: return render_json(result, graded, plan);
  }
  throw Error(ErrorKind::Format, "unknown report format");
}

std::string render_report(const Report& report, ReportFormat format) {
  return render_report(report.analysis, report.graded, report.plan, format);
}

Report parse_json_report(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("report is not valid JSON: ") + e.what());
  }

  try {
    Report report;
    for (const auto& r : doc.at("regions")) {
      report.analysis.regions.push_back(LevelRegions{r.at("level").get<int>(),
                                                     r.at("pos").get<std::vector<std::string>>(),
                                                     r.at("neg").get<std::vector<std::string>>(),
                                                     r.at("bnd").get<std::vector<std::string>>()});
    }
    for (const auto& r : doc.at("records")) {
      report.analysis.records.push_back(ImportanceRecord{
          r.at("node").get<std::string>(), r.at("level").get<int>(), r.at("child_count").get<int>(),
          r.at("overlap").get<int>(), parse_rational(r.at("alpha").get<std::string>())});
    }
    report.analysis.total = parse_rational(doc.at("total").get<std::string>());
    const auto& exact = doc.at("expected_result_exact");
    report.analysis.expected_result = exact.is_null() ? Rational(0) : parse_rational(exact.get<std::string>());
    for (const auto& g : doc.at("graded")) {
      report.graded.push_back(GradedRecord{g.at("node").get<std::string>(), g.at("expected_percent").get<int>(),
                                           g.at("actual_percent").get<int>(),
                                           parse_grade(g.at("grade").get<std::string>())});
    }
    const auto& plan = doc.at("remediation");
    report.plan.order = parse_sort_order(plan.at("order").get<std::string>());
    for (const auto& e : plan.at("entries")) {
      report.plan.entries.push_back(
          RemediationEntry{e.at("node").get<std::string>(), parse_rational(e.at("alpha").get<std::string>())});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Schema, std::string("report JSON does not match the schema: ") + e.what());
  }
}

}  // namespace roughmap
