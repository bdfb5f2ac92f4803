#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathsep {

// Every domain failure carries one of these names; the CLI prints the name
// verbatim on stderr.
enum class ErrorCode {
  NotConnected,
  HasCycle,
  BadToken,
  DuplicateEdge,
  UnknownVertex,
  NotALeaf,
  UnknownElement,
  PreconditionViolated,
  InvalidPair,
  TreeTooSmall,
  InternalClassificationError,
  NotConsecutive,
  UnsupportedTree,
  TooLarge,
  Timeout,
  NotSeparating,
  NotCovering,
  UsageError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace pathsep
