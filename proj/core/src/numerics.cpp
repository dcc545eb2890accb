#include "numerics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace spacs::detail {
namespace {

constexpr std::size_t table_size = 16384;

const std::vector<double>& table() {
  static const std::vector<double> values = [] {
    std::vector<double> v(table_size);
    for (std::size_t n = 0; n < table_size; ++n) v[n] = std::lgamma(static_cast<double>(n) + 1.0);
    return v;
  }();
  return values;
}

}  // namespace

double log_factorial(std::size_t n) {
  if (n < table_size) return table()[n];
  const double x = static_cast<double>(n) + 1.0;
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + 1.0 / (12.0 * x) -
         1.0 / (360.0 * x * x * x);
}

}  // namespace spacs::detail
