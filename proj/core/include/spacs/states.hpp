#pragma once

#include "spacs/fock.hpp"

namespace spacs {

/// Default largest probability mass allowed outside the retained basis.
inline constexpr double default_tail_tolerance = 1e-10;

/// Probability mass of |alpha> on levels n >= dim, summed from the exact
/// Poisson terms (no 1 - sum cancellation).
double coherent_tail_mass(const CoherentParams& alpha, FockDim dim);

/// Probability mass of the normalized a^dagger|alpha> on levels n >= dim.
double spacs_tail_mass(const CoherentParams& alpha, FockDim dim);

/// |alpha> with c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), renormalized on
/// the retained basis. Throws truncation_insufficient if the discarded tail
/// exceeds `tail_tol`.
StateVector coherent_state(const CoherentParams& alpha, FockDim dim, double tail_tol = default_tail_tolerance);

/// Single-photon-added coherent state gamma a^dagger|alpha>, renormalized on
/// the retained basis. The normalization is gamma = (1 + |alpha|^2)^{-1/2};
/// the often-quoted gamma = (1 + |alpha|^2)^{-1} does not normalize the state.
/// Amplitude c_0 is always exactly zero.
StateVector spacs_state(const CoherentParams& alpha, FockDim dim, double tail_tol = default_tail_tolerance);

/// gamma = (1 + |alpha|^2)^{-1/2}.
double spacs_normalization(const CoherentParams& alpha);

}  // namespace spacs
