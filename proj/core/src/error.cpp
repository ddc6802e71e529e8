#include "roughmap/error.hpp"

namespace roughmap {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidSubset: return "invalid-subset";
    case ErrorKind::InvalidPartition: return "invalid-partition";
    case ErrorKind::UnknownAttribute: return "unknown-attribute";
    case ErrorKind::DuplicateId: return "duplicate";
    case ErrorKind::UnknownParent: return "unknown-parent";
    case ErrorKind::Cycle: return "cycle";
    case ErrorKind::Structure: return "structure";
    case ErrorKind::RootMismatch: return "root-mismatch";
    case ErrorKind::Orphan: return "orphan";
    case ErrorKind::NothingToAnalyze: return "nothing-to-analyze";
    case ErrorKind::NoChildren: return "no-children";
    case ErrorKind::LevelMismatch: return "level-mismatch";
    case ErrorKind::Range: return "range";
    case ErrorKind::Format: return "format";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Parse:
    case ErrorKind::Schema:
    case ErrorKind::Format:
      return 2;
    default:
      return 1;
  }
}

}  // namespace roughmap
