#pragma once

// Truncated Fock-space containers and the linear algebra shared by every
// module. Basis states are |0>, ..., |n_max - 1>.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace spacs {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Dimension of the truncated basis; always at least 2.
class FockDim {
 public:
  explicit FockDim(std::size_t n_max);

  std::size_t size() const noexcept { return n_max_; }
  Eigen::Index index() const noexcept { return static_cast<Eigen::Index>(n_max_); }

  friend bool operator==(FockDim, FockDim) = default;

 private:
  std::size_t n_max_;
};

/// Amplitudes over the truncated basis. When `normalized()` is set the
/// squared norm is 1 within 1e-12; the constructor enforces that.
class StateVector {
 public:
  StateVector(FockDim dim, ComplexVector amplitudes, bool normalized = false);

  /// Number state |n>.
  static StateVector basis(FockDim dim, std::size_t n);

  FockDim dim() const noexcept { return dim_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t n) const { return amplitudes_(static_cast<Eigen::Index>(n)); }
  bool normalized() const noexcept { return normalized_; }

 private:
  FockDim dim_;
  ComplexVector amplitudes_;
  bool normalized_;
};

/// Dense square operator on the truncated basis.
class OperatorMatrix {
 public:
  OperatorMatrix(FockDim dim, ComplexMatrix entries);

  static OperatorMatrix identity(FockDim dim);

  FockDim dim() const noexcept { return dim_; }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  OperatorMatrix adjoint() const;

  friend OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
  friend OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
  friend OperatorMatrix operator-(const OperatorMatrix& lhs, const OperatorMatrix& rhs);
  friend OperatorMatrix operator*(Complex scale, const OperatorMatrix& op);

 private:
  FockDim dim_;
  ComplexMatrix entries_;
};

/// Coherent amplitude alpha = r e^{i theta}; theta is reduced to [0, 2 pi).
class CoherentParams {
 public:
  CoherentParams(double r, double theta);

  double r() const noexcept { return r_; }
  double theta() const noexcept { return theta_; }
  Complex alpha() const { return std::polar(r_, theta_); }
  double modulus_squared() const noexcept { return r_ * r_; }

 private:
  double r_;
  double theta_;
};

/// <lhs|rhs>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& lhs, const StateVector& rhs);
double norm(const StateVector& state);
StateVector normalize(const StateVector& state);
StateVector apply(const OperatorMatrix& op, const StateVector& state);
/// <psi|O|psi>; not divided by the norm.
Complex expectation(const OperatorMatrix& op, const StateVector& state);
/// |<lhs|rhs>| for normalized inputs.
double fidelity(const StateVector& lhs, const StateVector& rhs);

}  // namespace spacs
