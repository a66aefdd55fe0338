#pragma once

#include <stdexcept>
#include <string>

namespace ccc {

enum class ErrorKind {
  malformed_code,
  invalid_diagram,
  non_realizable,
  disconnected_diagram,
  internal_inconsistency,
  not_applicable,
  too_large,
  singular,
  shape_mismatch,
  empty_matrix,
  not_definite,
  precondition_violation,
};

const char* to_string(ErrorKind k);

/// Library failures are reported as exceptions; the CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind k, const std::string& msg);

}  // namespace ccc
