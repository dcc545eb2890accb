#include "spacs/states.hpp"

#include <cmath>
#include <string>

#include "numerics.hpp"
#include "spacs/error.hpp"

namespace spacs {
namespace {

// log of |alpha|^n / sqrt(n!) e^{-|alpha|^2/2}; r > 0
double log_coherent_modulus(double r, std::size_t n) {
  return static_cast<double>(n) * std::log(r) - 0.5 * detail::log_factorial(n) - 0.5 * r * r;
}

// Sums terms(n) for n >= start until they are negligible past the peak.
template <typename Term>
double sum_tail(std::size_t start, double peak, Term term) {
  double total = 0.0;
  for (std::size_t n = start;; ++n) {
    const double t = term(n);
    total += t;
    if (static_cast<double>(n) > peak && t <= 1e-300 + 1e-18 * total) break;
    if (n > start + 1'000'000) break;
  }
  return total;
}

void check_tail(double tail, double tail_tol, const char* what, FockDim dim) {
  if (!(tail_tol > 0.0)) throw Error(ErrorCode::invalid_parameter, "tail tolerance must be > 0");
  if (tail > tail_tol) {
    throw Error(ErrorCode::truncation_insufficient, std::string(what) + " loses tail mass " +
                                                        std::to_string(tail) + " at dimension " +
                                                        std::to_string(dim.size()));
  }
}

}  // namespace

double coherent_tail_mass(const CoherentParams& alpha, FockDim dim) {
  const double r = alpha.r();
  if (r == 0.0) return 0.0;
  const double peak = r * r + 1.0;
  return sum_tail(dim.size(), peak, [r](std::size_t n) { return std::exp(2.0 * log_coherent_modulus(r, n)); });
}

double spacs_tail_mass(const CoherentParams& alpha, FockDim dim) {
  // P(n) = n |c_{n-1}|^2 / (1 + r^2)
  const double r = alpha.r();
  if (r == 0.0) return 0.0;  // |1> lives inside any dim >= 2
  const double peak = r * r + 2.0;
  const double denom = 1.0 + r * r;
  return sum_tail(dim.size(), peak, [r, denom](std::size_t n) {
    return static_cast<double>(n) * std::exp(2.0 * log_coherent_modulus(r, n - 1)) / denom;
  });
}

double spacs_normalization(const CoherentParams& alpha) { return 1.0 / std::sqrt(1.0 + alpha.modulus_squared()); }

StateVector coherent_state(const CoherentParams& alpha, FockDim dim, double tail_tol) {
  check_tail(coherent_tail_mass(alpha, dim), tail_tol, "coherent state", dim);
  if (alpha.r() == 0.0) return StateVector::basis(dim, 0);

  ComplexVector amps(dim.index());
  for (std::size_t n = 0; n < dim.size(); ++n) {
    const double mag = std::exp(log_coherent_modulus(alpha.r(), n));
    amps(static_cast<Eigen::Index>(n)) = std::polar(mag, static_cast<double>(n) * alpha.theta());
  }
  return normalize(StateVector(dim, std::move(amps)));
}

StateVector spacs_state(const CoherentParams& alpha, FockDim dim, double tail_tol) {
  check_tail(spacs_tail_mass(alpha, dim), tail_tol, "single-photon-added coherent state", dim);
  if (alpha.r() == 0.0) return StateVector::basis(dim, 1);

  const double gamma = spacs_normalization(alpha);
  ComplexVector amps = ComplexVector::Zero(dim.index());
  for (std::size_t n = 1; n < dim.size(); ++n) {
    const double mag = gamma * std::sqrt(static_cast<double>(n)) * std::exp(log_coherent_modulus(alpha.r(), n - 1));
    amps(static_cast<Eigen::Index>(n)) = std::polar(mag, static_cast<double>(n - 1) * alpha.theta());
  }
  return normalize(StateVector(dim, std::move(amps)));
}

}  // namespace spacs
