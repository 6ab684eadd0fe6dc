#pragma once

#include <stdexcept>
#include <string>

namespace mjdt {

enum class ErrorCode {
  NotPartition,
  NotStrict,
  InnerExceeds,
  CellOutside,
  NotInMask,
  TooLarge,
  NotFound,
  Unsupported,
  NotStandard,
  ShapeMismatch,
  TooManyValues,
  InvalidFilling,
  InvalidPermutation,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; code() carries
// the machine-readable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mjdt
