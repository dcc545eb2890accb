#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spacs {

enum class ErrorCode {
  invalid_dimension,
  invalid_parameter,
  dimension_mismatch,
  zero_vector,
  truncation_insufficient,
  convergence_failure,
  undefined_weak_value,
  degenerate_postselection,
  oracle_dimension_exceeded,
  undefined_mandel_q,
  unknown_preset,
  parse_error,
};

/// Stable kebab-case name, used in status columns and CLI messages.
std::string_view to_string(ErrorCode code) noexcept;

/// True for failures of the numerics (truncation, convergence) as opposed to
/// bad inputs. The CLI maps these to a distinct exit code.
bool is_numeric_failure(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spacs
