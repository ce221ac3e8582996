#pragma once

#include <stdexcept>
#include <string>

namespace g2kl {

// Numeric values are part of the C API (see g2kl.h) and must not change.
enum class ErrorCode : int {
  ok = 0,
  parse = 1,
  invalid_argument = 2,
  resource_limit = 3,
  invariant_violation = 4,
  not_in_cell = 5,
  corrupt_file = 6,
  version_mismatch = 7,
  io = 8,
  internal = 9,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Checked runtime assertion for mathematical invariants; never compiled out.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::invariant_violation, what);
}

}  // namespace g2kl
