#pragma once

#include <stdexcept>
#include <string>

namespace splitpack {

enum class ErrorCode {
  invalid_parameter,
  unsupported_container,
  over_capacity,
  min_size_violation,
  conjugatedness_violation,
  malformed_tree,
  malformed_document,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace splitpack
