#pragma once

#include <cstddef>

namespace spacs::detail {

/// log(n!) from a table built once at first use; larger n fall back to a
/// Stirling series. glibc's lgamma writes the global `signgam`, so it is not
/// called on hot paths that may run concurrently.
double log_factorial(std::size_t n);

}  // namespace spacs::detail
