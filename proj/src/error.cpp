#include "pfol/error.hpp"

#include <atomic>

namespace pfol {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NonPrime";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kAuxVarsPresent: return "AuxVarsPresent";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIterationCap: return "IterationCap";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kZeroInput: return "ZeroInput";
    case ErrorCode::kNotSolution: return "NotSolution";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kNotInB: return "NotInB";
    case ErrorCode::kNotPrincipal: return "NotPrincipal";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSemanticError: return "SemanticError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {
std::atomic<bool> g_verify{false};
}

void set_verify_mode(bool on) noexcept { g_verify.store(on, std::memory_order_relaxed); }
bool verify_mode() noexcept { return g_verify.load(std::memory_order_relaxed); }

}  // namespace pfol
