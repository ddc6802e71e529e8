#include "roughmap/roster.hpp"

#include <array>
#include <algorithm>
#include <fstream>
#include <istream>
#include <unordered_set>

#include "roughmap/error.hpp"

namespace roughmap {
namespace {

constexpr std::array<std::string_view, 6> kRosterColumns = {
    "register_no", "name", "department", "semester", "subject", "map_path"};

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch != '"') {
        fields.back() += ch;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw Error(ErrorKind::Parse, "unterminated quoted CSV field in: " + line);
  return fields;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<RosterRecord> parse_roster(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::Schema, "roster has no header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line);

  std::array<std::size_t, kRosterColumns.size()> column{};
  for (std::size_t k = 0; k < kRosterColumns.size(); ++k) {
    auto it = std::find(header.begin(), header.end(), kRosterColumns[k]);
    if (it == header.end()) {
      throw Error(ErrorKind::Schema, "roster is missing column '" + std::string(kRosterColumns[k]) + "'");
    }
    column[k] = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<RosterRecord> records;
  std::unordered_set<std::string> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::Schema, "roster line " + std::to_string(line_no) + " has " +
                                         std::to_string(fields.size()) + " fields, expected " +
                                         std::to_string(header.size()));
    }
    RosterRecord r{fields[column[0]], fields[column[1]], fields[column[2]],
                   fields[column[3]], fields[column[4]], fields[column[5]]};
    if (r.register_no.empty()) {
      throw Error(ErrorKind::Schema, "roster line " + std::to_string(line_no) + " has an empty register_no");
    }
    if (!seen.insert(r.register_no).second) {
      throw Error(ErrorKind::DuplicateId, "duplicate register_no '" + r.register_no + "' on roster line " +
                                              std::to_string(line_no));
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RosterRecord> parse_roster(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open roster '" + path.string() + "'");
  return parse_roster(in);
}

}  // namespace roughmap
