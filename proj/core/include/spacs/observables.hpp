#pragma once

#include <vector>

#include "spacs/fock.hpp"

namespace spacs {

/// P(n) = |<n|state>|^2 over the retained basis.
class PhotonDistribution {
 public:
  explicit PhotonDistribution(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const noexcept { return probabilities_; }
  std::size_t size() const noexcept { return probabilities_.size(); }
  /// P(n); zero beyond the retained basis.
  double operator[](std::size_t n) const noexcept { return n < probabilities_.size() ? probabilities_[n] : 0.0; }

  double total() const;
  double mean() const;
  /// Two-pass sum of (n - mean)^2 P(n).
  double variance() const;

 private:
  std::vector<double> probabilities_;
};

struct MandelQ {
  double value;
};

struct SqueezingValue {
  double value;             // (Delta X_phi)^2 - 1/2
  double quadrature_phase;  // phi
};

/// Which normalization enters the closed-form SPACS formulas. `corrected` is
/// gamma^2 = (1 + |alpha|^2)^{-1}, the one that actually normalizes
/// gamma a^dagger|alpha>. `literal` takes gamma = (1 + |alpha|^2)^{-1}
/// at face value; it exists to show the pairings below detect it.
enum class GammaConvention { corrected, literal };

double spacs_gamma_squared(const CoherentParams& alpha, GammaConvention convention = GammaConvention::corrected);

PhotonDistribution photon_distribution(const StateVector& state);

/// [<n^2> - <n>^2 - <n>] / <n> from number moments of the distribution.
/// Throws undefined_mandel_q when <n> vanishes.
MandelQ mandel_q(const StateVector& state);

/// -gamma^2 (1 + 2|alpha|^2 + 2|alpha|^4) / (1 + 3|alpha|^2 + |alpha|^4)
MandelQ analytic_q_initial(const CoherentParams& alpha, GammaConvention convention = GammaConvention::corrected);

/// S_phi = <X_phi^2> - <X_phi>^2 - 1/2, with the moments taken from <a>,
/// <a^2> and <a^dagger a> using the canonical commutator, so the fixed
/// corner of the truncated a a^dagger never enters.
SqueezingValue squeezing(const StateVector& state, double phi);

/// gamma^4 [1 - |alpha|^2 cos 2(phi - theta)]
SqueezingValue analytic_s_initial(const CoherentParams& alpha, double phi,
                                  GammaConvention convention = GammaConvention::corrected);

}  // namespace spacs
