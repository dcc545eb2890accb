#pragma once

#include "spacs/fock.hpp"

namespace spacs {

/// exp(A) for a dense complex matrix by scaling and squaring with a
/// diagonal Pade approximant of degree 3, 5, 7, 9 or 13, chosen from the
/// 1-norm of A (Higham's backward-error thresholds for unit roundoff).
ComplexMatrix matrix_exponential(const ComplexMatrix& a);

}  // namespace spacs
