#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framekit {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NotPositiveDefinite,
  ZeroSubspace,
  NotOrthonormal,
  ShapeMismatch,
  ZeroLeadingCoefficient,
  IndexOutOfRange,
  NotAFrame,
  InvalidWeight,
  NonFiniteEntry,
  GenerationFailed,
  WrongFrameKind,
  InvalidConfig,
  InvalidFile,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI exit-code mapping) can branch without parsing text.
class FrameError : public std::runtime_error {
 public:
  FrameError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace framekit
