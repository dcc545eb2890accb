#include "spacs/error.hpp"

namespace spacs {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid-dimension";
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::zero_vector: return "zero-vector";
    case ErrorCode::truncation_insufficient: return "truncation-insufficient";
    case ErrorCode::convergence_failure: return "convergence-failure";
    case ErrorCode::undefined_weak_value: return "undefined-weak-value";
    case ErrorCode::degenerate_postselection: return "degenerate-postselection";
    case ErrorCode::oracle_dimension_exceeded: return "oracle-dimension-exceeded";
    case ErrorCode::undefined_mandel_q: return "undefined-mandel-q";
    case ErrorCode::unknown_preset: return "unknown-preset";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

bool is_numeric_failure(ErrorCode code) noexcept {
  return code == ErrorCode::truncation_insufficient || code == ErrorCode::convergence_failure;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace spacs
