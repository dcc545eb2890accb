#pragma once

#include "spacs/fock.hpp"

namespace spacs {

struct LadderOps {
  OperatorMatrix annihilation;  // a: a[n-1][n] = sqrt(n)
  OperatorMatrix creation;      // a^dagger
};

struct QuadratureOps {
  OperatorMatrix position;  // X = sigma (a^dagger + a)
  OperatorMatrix momentum;  // P = (i / 2 sigma)(a^dagger - a)
};

LadderOps ladder_ops(FockDim dim);

/// Number operator a^dagger a: diag(0, 1, ..., n_max - 1).
OperatorMatrix number_operator(FockDim dim);

/// Pointer position and momentum for beam width `sigma` > 0.
QuadratureOps quadrature_ops(FockDim dim, double sigma = 1.0);

/// X_phi = (a e^{-i phi} + a^dagger e^{i phi}) / sqrt(2).
OperatorMatrix phase_quadrature(FockDim dim, double phi);

/// Matrix of D(beta) = exp(beta a^dagger - beta^* a) restricted to the
/// retained basis. Entries are the exact infinite-dimensional elements
///   <m|D|n> = sqrt(n!/m!) beta^{m-n} e^{-|beta|^2/2} L_n^{(m-n)}(|beta|^2),  m >= n,
/// and the (-beta^*) mirror for m < n, evaluated with log-factorials and a
/// rescaled Laguerre recurrence so that no intermediate overflows.
OperatorMatrix displacement_matrix(Complex beta, FockDim dim);

}  // namespace spacs
