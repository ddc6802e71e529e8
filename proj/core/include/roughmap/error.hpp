#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace roughmap {

enum class ErrorKind {
  InvalidSubset,     // element not in the universe
  InvalidPartition,  // blocks overlap, are empty, or miss the universe
  UnknownAttribute,
  DuplicateId,
  UnknownParent,
  Cycle,
  Structure,         // zero or multiple roots
  RootMismatch,
  Orphan,
  NothingToAnalyze,
  NoChildren,
  LevelMismatch,
  Range,
  Format,
  Parse,
  Schema,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exit-code class of an error kind: 2 for I/O and parse problems, 1 otherwise.
int exit_code_for(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace roughmap
