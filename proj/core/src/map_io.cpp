#include "roughmap/map_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "roughmap/error.hpp"
#include "roughmap/roster.hpp"

namespace roughmap {
namespace {

using nlohmann::json;

std::string position_of(std::string_view document, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < document.size(); ++i) {
    if (document[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string require_string(const json& node, const char* key, std::size_t index) {
  auto it = node.find(key);
  if (it == node.end() || !it->is_string()) {
    throw Error(ErrorKind::Schema,
                "node #" + std::to_string(index) + ": '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ConceptMap parse_concept_map(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const auto at = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorKind::Parse, "malformed map at " + position_of(document, at) + ": " + e.what());
  }

  if (!doc.is_object()) throw Error(ErrorKind::Schema, "map document must be a JSON object");
  std::string subject;
  if (auto it = doc.find("subject"); it != doc.end()) {
    if (!it->is_string()) throw Error(ErrorKind::Schema, "'subject' must be a string");
    subject = it->get<std::string>();
  }
  auto nodes_it = doc.find("nodes");
  if (nodes_it == doc.end() || !nodes_it->is_array()) {
    throw Error(ErrorKind::Schema, "map document needs a 'nodes' array");
  }

  std::vector<RawNode> nodes;
  nodes.reserve(nodes_it->size());
  std::size_t index = 0;
  for (const auto& n : *nodes_it) {
    if (!n.is_object()) throw Error(ErrorKind::Schema, "node #" + std::to_string(index) + " must be an object");
    RawNode raw;
    raw.id = require_string(n, "id", index);
    auto parent = n.find("parent");
    if (parent != n.end() && !parent->is_null()) {
      if (!parent->is_string()) {
        throw Error(ErrorKind::Schema, "node '" + raw.id + "': 'parent' must be a string or null");
      }
      raw.parent = parent->get<std::string>();
    }
    if (auto phrase = n.find("phrase"); phrase != n.end() && !phrase->is_null()) {
      raw.phrase = require_string(n, "phrase", index);
    }
    nodes.push_back(std::move(raw));
    ++index;
  }
  return validate_map(std::move(subject), std::move(nodes));
}

ConceptMap parse_concept_map_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return parse_concept_map(text);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string serialize_concept_map(const ConceptMap& map) {
  nlohmann::ordered_json doc;
  doc["subject"] = map.subject();
  doc["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : map.nodes()) {
    nlohmann::ordered_json node;
    node["id"] = n.id;
    node["parent"] = n.parent ? nlohmann::ordered_json(*n.parent) : nlohmann::ordered_json(nullptr);
    if (n.phrase) node["phrase"] = *n.phrase;
    doc["nodes"].push_back(std::move(node));
  }
  return doc.dump(2) + "\n";
}

DecisionTable parse_decision_table_csv(std::istream& in, const std::vector<std::string>& decision) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::Schema, "decision table has no header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto header = split_csv_line(line);
  if (header.size() < 2) throw Error(ErrorKind::Schema, "decision table needs an object column and attributes");
  std::vector<std::string> attributes(header.begin() + 1, header.end());

  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::Schema, "decision table line " + std::to_string(line_no) + " has " +
                                         std::to_string(fields.size()) + " fields, expected " +
                                         std::to_string(header.size()));
    }
    objects.push_back(fields.front());
    values.emplace_back(fields.begin() + 1, fields.end());
  }

  std::vector<std::string> condition;
  for (const auto& a : attributes) {
    if (std::find(decision.begin(), decision.end(), a) == decision.end()) condition.push_back(a);
  }
  return DecisionTable(Universe(std::move(objects)), std::move(attributes), std::move(values),
                       std::move(condition), decision);
}

}  // namespace roughmap
