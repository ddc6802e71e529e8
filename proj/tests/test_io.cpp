#include <gtest/gtest.h>

#include <unistd.h>

#include <fstream>
#include <random>
#include <sstream>

#include "roughmap/error.hpp"
#include "roughmap/map_io.hpp"
#include "roughmap/roster.hpp"
#include "roughmap/runner.hpp"
#include "support/fixtures.hpp"

namespace roughmap {
namespace {

namespace fs = std::filesystem;

ErrorKind parse_error_kind(std::string_view doc) {
  try {
    (void)parse_concept_map(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("roughmap_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

TEST(ParseConceptMap, MinimalDocument) {
  const auto m = parse_concept_map(R"({"subject":"demo","nodes":[{"id":"S1","parent":null}]})");
  EXPECT_EQ(m.subject(), "demo");
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.root(), "S1");
}

TEST(ParseConceptMap, WorkedExampleFile) {
  const auto m = parse_concept_map_file(testing::data_dir() / "example_teacher.json");
  EXPECT_EQ(m.size(), 20u);
  const auto levels = compute_levels(m);
  EXPECT_EQ(*std::max_element(levels.begin(), levels.end()), 2);
}

TEST(ParseConceptMap, DuplicateIdIsNamed) {
  try {
    (void)parse_concept_map(R"({"nodes":[{"id":"S1","parent":null},{"id":"C3","parent":"S1"},{"id":"C3","parent":"S1"}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateId);
    EXPECT_NE(std::string(e.what()).find("'C3'"), std::string::npos);
  }
}

TEST(ParseConceptMap, SyntaxErrorReportsPosition) {
  try {
    (void)parse_concept_map("{\n  \"nodes\": [\n    {\"id\": \"S1\" \"parent\": null}\n  ]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ParseConceptMap, SchemaAndValidationErrors) {
  EXPECT_EQ(parse_error_kind("[]"), ErrorKind::Schema);
  EXPECT_EQ(parse_error_kind(R"({"subject":"x"})"), ErrorKind::Schema);
  EXPECT_EQ(parse_error_kind(R"({"nodes":[{"parent":null}]})"), ErrorKind::Schema);
  EXPECT_EQ(parse_error_kind(R"({"nodes":[{"id":"S","parent":3}]})"), ErrorKind::Schema);
  EXPECT_EQ(parse_error_kind(R"({"nodes":[{"id":"S"},{"id":"T"}]})"), ErrorKind::Structure);
  EXPECT_EQ(parse_error_kind(R"({"nodes":[{"id":"S"},{"id":"T","parent":"Q"}]})"), ErrorKind::UnknownParent);
}

TEST(ParseConceptMap, PhrasesAreKeptButIgnored) {
  const auto with = parse_concept_map(
      R"({"nodes":[{"id":"S","parent":null},{"id":"A","parent":"S","phrase":"consists of"}]})");
  const auto without = parse_concept_map(R"({"nodes":[{"id":"S","parent":null},{"id":"A","parent":"S"}]})");
  EXPECT_EQ(with.nodes()[1].phrase, "consists of");
  EXPECT_EQ(analyze(integrate(with, without)), analyze(integrate(without, without)));
}

TEST(ParseConceptMap, MissingFileIsIoError) {
  try {
    (void)parse_concept_map_file(testing::data_dir() / "nope.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(ParseConceptMap, SerializeRoundTripOnRandomTrees) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto nodes = testing::random_tree(std::uniform_int_distribution<std::size_t>(1, 30)(rng), rng);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    if (trial % 4 == 0 && nodes.size() > 1) nodes[1].phrase = "is a \"kind\" of";
    const auto map = validate_map("subj " + std::to_string(trial), nodes);
    const auto back = parse_concept_map(serialize_concept_map(map));
    ASSERT_EQ(back.subject(), map.subject());
    ASSERT_EQ(back.nodes(), map.nodes());
  }
}

TEST(Roster, ParsesRowsInOrder) {
  std::istringstream in(
      "register_no,name,department,semester,subject,map_path\n"
      "R1,\"Kumar, A.\",CSE,V,DS,a.json\n"
      "R2,Priya,ECE,III,DS,b.json\n");
  const auto roster = parse_roster(in);
  ASSERT_EQ(roster.size(), 2u);
  EXPECT_EQ(roster[0].register_no, "R1");
  EXPECT_EQ(roster[0].name, "Kumar, A.");
  EXPECT_EQ(roster[1].department, "ECE");
  EXPECT_EQ(roster[1].map_path, fs::path("b.json"));
}

TEST(Roster, HeaderOnlyIsEmpty) {
  std::istringstream in("register_no,name,department,semester,subject,map_path\n");
  EXPECT_TRUE(parse_roster(in).empty());
}

TEST(Roster, ColumnOrderIsFree) {
  std::istringstream in("map_path,subject,semester,department,name,register_no,notes\nm.json,DS,V,CSE,N,R9,x\n");
  const auto roster = parse_roster(in);
  ASSERT_EQ(roster.size(), 1u);
  EXPECT_EQ(roster[0].register_no, "R9");
  EXPECT_EQ(roster[0].map_path, fs::path("m.json"));
}

TEST(Roster, Errors) {
  auto kind = [](const std::string& text) {
    std::istringstream in(text);
    try {
      (void)parse_roster(in);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  EXPECT_EQ(kind("register_no,name,department,semester,subject\n"), ErrorKind::Schema);
  EXPECT_EQ(kind("register_no,name,department,semester,subject,map_path\nR1,a,b,c,d,e\nR1,f,g,h,i,j\n"),
            ErrorKind::DuplicateId);
  EXPECT_EQ(kind("register_no,name,department,semester,subject,map_path\n,a,b,c,d,e\n"), ErrorKind::Schema);
  EXPECT_EQ(kind("register_no,name,department,semester,subject,map_path\nR1,a,b\n"), ErrorKind::Schema);
  EXPECT_EQ(kind(""), ErrorKind::Schema);
  EXPECT_EQ(kind("register_no,name,department,semester,subject,map_path\nR1,\"open,b,c,d,e,f\n"), ErrorKind::Parse);
}

TEST(Csv, EscapeAndSplitAgree) {
  for (const std::string field : {"plain", "a,b", "say \"hi\"", ""}) {
    const auto line = csv_escape(field) + "," + csv_escape("tail");
    EXPECT_EQ(split_csv_line(line), (std::vector<std::string>{field, "tail"}));
  }
}

RunConfig single_config(const fs::path& out) {
  RunConfig c;
  c.teacher_map = testing::data_dir() / "example_teacher.json";
  c.mode = SingleRun{testing::data_dir() / "example_student.json", out};
  return c;
}

TEST(RunAnalyze, SingleRunReportsWorkedExampleValues) {
  RunConfig c;
  c.teacher_map = testing::data_dir() / "example_teacher.json";
  c.mode = SingleRun{testing::data_dir() / "example_student.json", std::nullopt};
  c.format = ReportFormat::Csv;
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(run_analyze(c, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("expected_result,0.548"), std::string::npos);
  for (const auto* row : {"U1,2,3,2,0.66,100,66,B", "U2,2,3,1,0.33,100,33,C", "U3,2,2,2,1,100,100,A",
                          "U4,2,2,1,0.5,100,50,B", "U5,2,4,1,0.25,100,25,C"}) {
    EXPECT_NE(out.str().find(row), std::string::npos) << row;
  }
}

TEST(RunAnalyze, SingleRunWritesFile) {
  TempDir tmp;
  const auto target = tmp.path() / "r.json";
  std::ostringstream out;
  std::ostringstream err;
  auto c = single_config(target);
  c.format = ReportFormat::Json;
  ASSERT_EQ(run_analyze(c, out, err), kExitOk);
  EXPECT_TRUE(out.str().empty());
  const auto report = parse_json_report(read_text_file(target));
  EXPECT_EQ(report.analysis.expected_result, Rational(548, 1000));
}

TEST(RunAnalyze, MissingTeacherIsExitTwoWithoutOutput) {
  TempDir tmp;
  const auto target = tmp.path() / "r.txt";
  auto c = single_config(target);
  c.teacher_map = tmp.path() / "missing.json";
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run_analyze(c, out, err), kExitIoError);
  EXPECT_FALSE(fs::exists(target));
  const auto diagnostic = err.str();
  EXPECT_EQ(std::count(diagnostic.begin(), diagnostic.end(), '\n'), 1);
  EXPECT_NE(err.str().find("missing.json"), std::string::npos);
}

TEST(RunAnalyze, AnalysisErrorIsExitOne) {
  TempDir tmp;
  write(tmp.path() / "other_root.json", R"({"nodes":[{"id":"X","parent":null}]})");
  RunConfig c;
  c.teacher_map = testing::data_dir() / "example_teacher.json";
  c.mode = SingleRun{tmp.path() / "other_root.json", std::nullopt};
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run_analyze(c, out, err), kExitAnalysisError);
  EXPECT_NE(err.str().find("root-mismatch"), std::string::npos);
}

RunConfig batch_config(const fs::path& roster, const fs::path& out_dir) {
  RunConfig c;
  c.teacher_map = testing::data_dir() / "example_teacher.json";
  BatchRun b;
  b.roster = roster;
  b.out_dir = out_dir;
  c.mode = b;
  return c;
}

TEST(RunBatch, IdenticalStudentsGetIdenticalReports) {
  TempDir tmp;
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(run_analyze(batch_config(testing::data_dir() / "roster.csv", tmp.path()), out, err), kExitOk)
      << err.str();
  const auto a = read_text_file(tmp.path() / "2009CS01.txt");
  const auto b = read_text_file(tmp.path() / "2009CS02.txt");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, render_report(build_report(analyze(testing::example_integrated()), SortOrder::Ascending),
                             ReportFormat::Text));
  EXPECT_EQ(read_text_file(tmp.path() / "cohort_summary.csv"),
            "register_no,name,department,semester,subject,expected_result,grades\n"
            "2009CS01,\"Kumar, A.\",CSE,V,Data Structures,0.548,U1:B;U2:C;U3:A;U4:B;U5:C\n"
            "2009CS02,Priya S,CSE,V,Data Structures,0.548,U1:B;U2:C;U3:A;U4:B;U5:C\n");
}

TEST(RunBatch, ReportsDoNotDependOnRowOrder) {
  TempDir tmp;
  write(tmp.path() / "roster.csv",
        "register_no,name,department,semester,subject,map_path\n"
        "B2,Second,CSE,V,DS,example_teacher.json\n"
        "A1,First,CSE,V,DS,example_student.json\n");
  write(tmp.path() / "reversed.csv",
        "register_no,name,department,semester,subject,map_path\n"
        "A1,First,CSE,V,DS,example_student.json\n"
        "B2,Second,CSE,V,DS,example_teacher.json\n");
  for (const auto* roster : {"roster.csv", "reversed.csv"}) {
    auto c = batch_config(tmp.path() / roster, tmp.path() / (std::string("out_") + roster));
    std::get<BatchRun>(c.mode).maps_dir = testing::data_dir();
    std::get<BatchRun>(c.mode).jobs = 2;
    c.format = ReportFormat::Json;
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(run_analyze(c, out, err), kExitOk) << err.str();
  }
  for (const auto* id : {"A1.json", "B2.json"}) {
    EXPECT_EQ(read_text_file(tmp.path() / "out_roster.csv" / id), read_text_file(tmp.path() / "out_reversed.csv" / id));
  }
  const auto summary = read_text_file(tmp.path() / "out_roster.csv" / "cohort_summary.csv");
  EXPECT_LT(summary.find("B2,"), summary.find("A1,"));
}

TEST(RunBatch, MissingStudentMapNamesRegisterNumberAndPath) {
  TempDir tmp;
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run_analyze(batch_config(testing::data_dir() / "broken_roster.csv", tmp.path() / "out"), out, err);
  EXPECT_EQ(rc, kExitIoError);
  EXPECT_NE(err.str().find("2009CS07"), std::string::npos) << err.str();
  EXPECT_NE(err.str().find("does_not_exist.json"), std::string::npos) << err.str();
  EXPECT_FALSE(fs::exists(tmp.path() / "out"));
}

TEST(RunValidate, ExitCodes) {
  TempDir tmp;
  write(tmp.path() / "cycle.json", R"({"nodes":[{"id":"A","parent":"B"},{"id":"B","parent":"A"}]})");
  write(tmp.path() / "broken.json", "{ nodes: ");
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run_validate(testing::data_dir() / "example_teacher.json", out, err), kExitOk);
  EXPECT_NE(out.str().find("20 nodes"), std::string::npos);
  EXPECT_EQ(run_validate(tmp.path() / "cycle.json", out, err), kExitAnalysisError);
  EXPECT_EQ(run_validate(tmp.path() / "broken.json", out, err), kExitIoError);
  EXPECT_EQ(run_validate(tmp.path() / "absent.json", out, err), kExitIoError);
}

}  // namespace
}  // namespace roughmap
