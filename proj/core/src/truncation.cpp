#include "spacs/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "numerics.hpp"
#include "spacs/error.hpp"

namespace spacs {
namespace {

// Prefix sums of P(n) and n P(n) for the worst-case displaced SPACS; P is
// normalized to the untruncated norm 1 + r^2.
struct DisplacedProfile {
  std::vector<double> mass;  // mass[d] = sum_{n<d} P(n)
  std::vector<double> mean;  // mean[d] = sum_{n<d} n P(n)
};

DisplacedProfile displaced_profile(double r, double s, std::size_t length) {
  const double b = r + s;
  std::vector<double> coherent(length + 1, 0.0);
  if (b == 0.0) {
    coherent[0] = 1.0;
  } else {
    for (std::size_t n = 0; n <= length; ++n) {
      coherent[n] = std::exp(static_cast<double>(n) * std::log(b) - 0.5 * detail::log_factorial(n) - 0.5 * b * b);
    }
  }
  DisplacedProfile out{std::vector<double>(length + 1, 0.0), std::vector<double>(length + 1, 0.0)};
  const double norm2 = 1.0 + r * r;
  for (std::size_t n = 0; n < length; ++n) {
    const double up = n == 0 ? 0.0 : std::sqrt(static_cast<double>(n)) * coherent[n - 1];
    const double u = up - s * coherent[n];
    const double p = u * u / norm2;
    out.mass[n + 1] = out.mass[n] + p;
    out.mean[n + 1] = out.mean[n] + static_cast<double>(n) * p;
  }
  return out;
}

}  // namespace

std::size_t dim_floor(double modulus, double s) {
  const double b = modulus + s;
  return static_cast<std::size_t>(std::floor(b * b + 10.0 * b + 20.0));
}

FockDim adaptive_dim(const CoherentParams& alpha, double s, double tol, std::size_t cap) {
  if (!(tol > 0.0)) throw Error(ErrorCode::invalid_parameter, "truncation tolerance must be > 0");
  if (!(s >= 0.0) || !std::isfinite(s)) throw Error(ErrorCode::invalid_parameter, "coupling strength s must be >= 0");

  std::size_t dim = dim_floor(alpha.r(), s);
  if (dim > cap) {
    throw Error(ErrorCode::convergence_failure, "dimension floor " + std::to_string(dim) + " exceeds cap " +
                                                    std::to_string(cap));
  }
  const DisplacedProfile profile = displaced_profile(alpha.r(), s, 2 * cap);
  while (dim <= cap) {
    const std::size_t doubled = 2 * dim;
    const double mass_change = profile.mass[doubled] - profile.mass[dim];
    const double mean_here = profile.mean[dim] / profile.mass[dim];
    const double mean_doubled = profile.mean[doubled] / profile.mass[doubled];
    const double mean_change = std::abs(mean_doubled - mean_here) / std::max(1.0, mean_doubled);
    if (mass_change < tol && mean_change < tol) return FockDim(dim);
    dim = std::max(dim + 1, (dim * 5 + 3) / 4);
  }
  throw Error(ErrorCode::convergence_failure, "no dimension up to cap " + std::to_string(cap) +
                                                  " meets tolerance " + std::to_string(tol));
}

FockDim resolve_dim(const TruncationPolicy& policy, const CoherentParams& alpha, double s) {
  if (policy.max_dim > default_max_dim) {
    throw Error(ErrorCode::invalid_parameter, "max_dim must be <= " + std::to_string(default_max_dim));
  }
  if (policy.fixed_dim) {
    if (*policy.fixed_dim > policy.max_dim) {
      throw Error(ErrorCode::invalid_parameter, "fixed dimension exceeds max_dim");
    }
    return FockDim(*policy.fixed_dim);
  }
  return adaptive_dim(alpha, s, policy.tol, policy.max_dim);
}

}  // namespace spacs
