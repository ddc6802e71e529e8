#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace roughmap {

struct RosterRecord {
  std::string register_no;
  std::string name;
  std::string department;
  std::string semester;
  std::string subject;
  std::filesystem::path map_path;

  friend bool operator==(const RosterRecord&, const RosterRecord&) = default;
};

/// CSV with header `register_no,name,department,semester,subject,map_path`
/// (columns may appear in any order, extra columns are ignored).
std::vector<RosterRecord> parse_roster(std::istream& in);
std::vector<RosterRecord> parse_roster(const std::filesystem::path& path);

/// Splits one CSV record; handles double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line);
/// Quotes a field only when it contains a comma, quote or line break.
std::string csv_escape(const std::string& field);

}  // namespace roughmap
