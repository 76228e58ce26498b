#include "splitpack/error.hpp"

namespace splitpack {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::unsupported_container: return "unsupported-container";
    case ErrorCode::over_capacity: return "over-capacity";
    case ErrorCode::min_size_violation: return "min-size-violation";
    case ErrorCode::conjugatedness_violation: return "conjugatedness-violation";
    case ErrorCode::malformed_tree: return "malformed-tree";
    case ErrorCode::malformed_document: return "malformed-document";
  }
  return "unknown";
}

}  // namespace splitpack
