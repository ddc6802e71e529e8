#pragma once

#include "roughmap/concept_map.hpp"
#include "roughmap/map_io.hpp"
#include "support/oracle.hpp"

namespace roughmap::testing {

// Teacher: S1 -> U1..U5; U1 -> C1..C3, U2 -> C4..C6, U3 -> C7,C8, U4 -> C9,C10,
// U5 -> C11..C14. The student lacks C1,C4,C6,C10,C11,C13,C14 and files U2
// under U1 instead of S1.
inline ConceptMap example_teacher() { return parse_concept_map_file(data_dir() / "example_teacher.json"); }
inline ConceptMap example_student() { return parse_concept_map_file(data_dir() / "example_student.json"); }
inline IntegratedMap example_integrated() { return integrate(example_teacher(), example_student()); }

inline RawNode node(std::string id, std::string parent) { return {std::move(id), std::move(parent), std::nullopt}; }
inline RawNode root(std::string id) { return {std::move(id), std::nullopt, std::nullopt}; }

}  // namespace roughmap::testing
