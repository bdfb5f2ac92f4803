#include "pathsep/error.hpp"

namespace pathsep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::HasCycle: return "HasCycle";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::TreeTooSmall: return "TreeTooSmall";
    case ErrorCode::InternalClassificationError: return "InternalClassificationError";
    case ErrorCode::NotConsecutive: return "NotConsecutive";
    case ErrorCode::UnsupportedTree: return "UnsupportedTree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::NotSeparating: return "NotSeparating";
    case ErrorCode::NotCovering: return "NotCovering";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(detail) {}

}  // namespace pathsep
