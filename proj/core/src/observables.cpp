#include "spacs/observables.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "spacs/error.hpp"

namespace spacs {

PhotonDistribution::PhotonDistribution(std::vector<double> probabilities) : probabilities_(std::move(probabilities)) {
  for (double p : probabilities_) {
    if (!(p >= 0.0)) throw Error(ErrorCode::invalid_parameter, "photon probabilities must be >= 0");
  }
}

double PhotonDistribution::total() const { return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0); }

double PhotonDistribution::mean() const {
  double m = 0.0;
  for (std::size_t n = 0; n < probabilities_.size(); ++n) m += static_cast<double>(n) * probabilities_[n];
  return m / total();
}

double PhotonDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t n = 0; n < probabilities_.size(); ++n) {
    const double d = static_cast<double>(n) - m;
    v += d * d * probabilities_[n];
  }
  return v / total();
}

double spacs_gamma_squared(const CoherentParams& alpha, GammaConvention convention) {
  const double g = 1.0 / (1.0 + alpha.modulus_squared());
  return convention == GammaConvention::corrected ? g : g * g;
}

PhotonDistribution photon_distribution(const StateVector& state) {
  std::vector<double> p(state.dim().size());
  for (std::size_t n = 0; n < p.size(); ++n) p[n] = std::norm(state[n]);
  return PhotonDistribution(std::move(p));
}

MandelQ mandel_q(const StateVector& state) {
  const PhotonDistribution dist = photon_distribution(state);
  const double mean = dist.mean();
  if (!(mean > 1e-14)) throw Error(ErrorCode::undefined_mandel_q, "Mandel Q is undefined for <n> = 0");
  return {(dist.variance() - mean) / mean};
}

MandelQ analytic_q_initial(const CoherentParams& alpha, GammaConvention convention) {
  const double x = alpha.modulus_squared();
  return {-spacs_gamma_squared(alpha, convention) * (1.0 + 2.0 * x + 2.0 * x * x) / (1.0 + 3.0 * x + x * x)};
}

SqueezingValue squeezing(const StateVector& state, double phi) {
  const ComplexVector& c = state.amplitudes();
  const Eigen::Index n_max = c.size();
  const double norm2 = c.squaredNorm();
  Complex a1 = 0.0;  // <a>
  Complex a2 = 0.0;  // <a^2>
  double number = 0.0;
  for (Eigen::Index n = 0; n < n_max; ++n) {
    const double nd = static_cast<double>(n);
    number += nd * std::norm(c(n));
    if (n + 1 < n_max) a1 += std::conj(c(n)) * std::sqrt(nd + 1.0) * c(n + 1);
    if (n + 2 < n_max) a2 += std::conj(c(n)) * std::sqrt((nd + 1.0) * (nd + 2.0)) * c(n + 2);
  }
  a1 /= norm2;
  a2 /= norm2;
  number /= norm2;

  const Complex rot = std::polar(1.0, -phi);
  // X_phi = (a e^{-i phi} + h.c.)/sqrt 2
  const double mean_x = std::sqrt(2.0) * (rot * a1).real();
  const double mean_x2 = (rot * rot * a2).real() + number + 0.5;
  const double variance = mean_x2 - mean_x * mean_x;
  return {variance - 0.5, phi};
}

SqueezingValue analytic_s_initial(const CoherentParams& alpha, double phi, GammaConvention convention) {
  const double g2 = spacs_gamma_squared(alpha, convention);
  return {g2 * g2 * (1.0 - alpha.modulus_squared() * std::cos(2.0 * (phi - alpha.theta()))), phi};
}

}  // namespace spacs
