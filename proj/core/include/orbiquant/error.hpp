#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbiquant {

/// Machine-readable failure categories. The CLI prints these verbatim as
/// `error: <CODE>: <detail>`.
enum class ErrorCode {
  BadParameter,
  MirrorVariant,
  ClosedVariant,
  BaseMismatch,
  IndexOutOfRange,
  UnsupportedGroup,
  UnsupportedModel,
  UnsupportedBase,
  NotIntegral,
  NoHalfForm,
  NotCoprime,
  InvalidSector,
  OrderMismatch,
  DomainError,
  DomainMismatch,
  BadSamplePoints,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace orbiquant
