#pragma once

#include <cstddef>
#include <optional>

#include "spacs/fock.hpp"

namespace spacs {

inline constexpr std::size_t default_max_dim = 4096;

/// How the Fock dimension of a calculation is chosen.
struct TruncationPolicy {
  double tol = 1e-12;                    // observable change / tail tolerance
  std::optional<std::size_t> fixed_dim;  // bypasses adaptive_dim when set
  std::size_t max_dim = default_max_dim;
};

/// floor((|alpha| + s)^2 + 10 (|alpha| + s) + 20): where adaptive_dim starts.
std::size_t dim_floor(double modulus, double s);

/// Smallest dimension on a geometric ladder (starting at dim_floor, ratio
/// 5/4) such that doubling it changes the retained probability and the mean
/// photon number of the worst-case displaced SPACS by less than `tol`.
///
/// The worst case is a displacement by s along alpha: D(s) a^dagger|alpha>
/// is, up to a phase, (a^dagger - s)|r + s>, so its amplitudes are
/// sqrt(n) c_{n-1} - s c_n with c the coherent amplitudes of r + s and no
/// displacement matrix is needed. Throws convergence_failure past `cap`.
FockDim adaptive_dim(const CoherentParams& alpha, double s, double tol, std::size_t cap = default_max_dim);

/// Applies a policy: fixed_dim when set (bounded by max_dim), otherwise
/// adaptive_dim with policy.tol and policy.max_dim.
FockDim resolve_dim(const TruncationPolicy& policy, const CoherentParams& alpha, double s);

}  // namespace spacs
