#include "g2kl/error.hpp"

namespace g2kl {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::resource_limit: return "resource limit exceeded";
    case ErrorCode::invariant_violation: return "invariant violation";
    case ErrorCode::not_in_cell: return "not in the lowest cell";
    case ErrorCode::corrupt_file: return "corrupt file";
    case ErrorCode::version_mismatch: return "version mismatch";
    case ErrorCode::io: return "i/o error";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace g2kl
