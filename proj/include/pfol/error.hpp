#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfol {

enum class ErrorCode {
  kNonPrime,
  kReducibleModulus,
  kFieldTooLarge,
  kInvalidArgument,
  kDivisionByZero,
  kDivisionByZeroPoly,
  kRingMismatch,
  kAuxVarsPresent,
  kLengthMismatch,
  kIterationCap,
  kNotClosed,
  kZeroInput,
  kNotSolution,
  kBudgetExceeded,
  kDegreeTooHigh,
  kNotInB,
  kNotPrincipal,
  kParseError,
  kSemanticError,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// All failures raised by the library carry one of the codes above so that
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Runtime switch for the recombination self-checks in modgb and friends.
// Tests turn it on; the CLI leaves it off.
void set_verify_mode(bool on) noexcept;
bool verify_mode() noexcept;

}  // namespace pfol
