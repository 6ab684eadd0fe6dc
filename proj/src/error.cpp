#include "mjdt/error.hpp"

namespace mjdt {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPartition: return "REJECT_NOT_PARTITION";
    case ErrorCode::NotStrict: return "REJECT_NOT_STRICT";
    case ErrorCode::InnerExceeds: return "REJECT_INNER_EXCEEDS";
    case ErrorCode::CellOutside: return "ERR_CELL_OUTSIDE";
    case ErrorCode::NotInMask: return "ERR_NOT_IN_MASK";
    case ErrorCode::TooLarge: return "ERR_TOO_LARGE";
    case ErrorCode::NotFound: return "ERR_NOT_FOUND";
    case ErrorCode::Unsupported: return "ERR_UNSUPPORTED";
    case ErrorCode::NotStandard: return "ERR_NOT_STANDARD";
    case ErrorCode::ShapeMismatch: return "ERR_SHAPE_MISMATCH";
    case ErrorCode::TooManyValues: return "ERR_TOO_MANY_VALUES";
    case ErrorCode::InvalidFilling: return "ERR_INVALID_FILLING";
    case ErrorCode::InvalidPermutation: return "ERR_INVALID_PERMUTATION";
    case ErrorCode::ParseError: return "ERR_PARSE";
  }
  return "ERR_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace mjdt
