#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "roughmap/concept_map.hpp"
#include "roughmap/roughset.hpp"

namespace roughmap {

/// Map document: {"subject": str, "nodes": [{"id": str, "parent": str|null, "phrase"?: str}]}.
/// Syntax errors raise ErrorKind::Parse with line and column; structural
/// problems propagate from validate_map.
ConceptMap parse_concept_map(std::string_view document);
ConceptMap parse_concept_map_file(const std::filesystem::path& path);

std::string serialize_concept_map(const ConceptMap& map);

/// Decision table CSV: header `object,<attr>...`, one object per row. Every
/// attribute not listed in `decision` is a condition attribute.
DecisionTable parse_decision_table_csv(std::istream& in, const std::vector<std::string>& decision);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace roughmap
