#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace golden_bounds {

enum class ErrorCode {
  NonSquare,
  NotHermitian,
  NotPositiveDefinite,
  NoConvergence,
  DomainError,
  BadIndex,
  DimMismatch,
  CondError,
  EmptySequence,
  NonPositive,
  BadRange,
  BadGrid,
  HypothesisViolated,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace golden_bounds
