#include "spacs/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "spacs/error.hpp"

namespace spacs {
namespace {

void require_same_dim(FockDim a, FockDim b, const char* where) {
  if (a != b) {
    throw Error(ErrorCode::dimension_mismatch, std::string(where) + ": " + std::to_string(a.size()) +
                                                   " vs " + std::to_string(b.size()));
  }
}

}  // namespace

FockDim::FockDim(std::size_t n_max) : n_max_(n_max) {
  if (n_max < 2) {
    throw Error(ErrorCode::invalid_dimension, "Fock dimension must be >= 2, got " + std::to_string(n_max));
  }
}

StateVector::StateVector(FockDim dim, ComplexVector amplitudes, bool normalized)
    : dim_(dim), amplitudes_(std::move(amplitudes)), normalized_(normalized) {
  if (amplitudes_.size() != dim_.index()) {
    throw Error(ErrorCode::dimension_mismatch, "amplitude count " + std::to_string(amplitudes_.size()) +
                                                   " != dimension " + std::to_string(dim_.size()));
  }
  if (normalized_ && std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_parameter, "state flagged normalized but has squared norm " +
                                                  std::to_string(amplitudes_.squaredNorm()));
  }
}

StateVector StateVector::basis(FockDim dim, std::size_t n) {
  if (n >= dim.size()) {
    throw Error(ErrorCode::invalid_parameter,
                "basis index " + std::to_string(n) + " outside dimension " + std::to_string(dim.size()));
  }
  ComplexVector amps = ComplexVector::Zero(dim.index());
  amps(static_cast<Eigen::Index>(n)) = 1.0;
  return StateVector(dim, std::move(amps), true);
}

OperatorMatrix::OperatorMatrix(FockDim dim, ComplexMatrix entries) : dim_(dim), entries_(std::move(entries)) {
  if (entries_.rows() != dim_.index() || entries_.cols() != dim_.index()) {
    throw Error(ErrorCode::dimension_mismatch, "operator is " + std::to_string(entries_.rows()) + "x" +
                                                   std::to_string(entries_.cols()) + ", expected " +
                                                   std::to_string(dim_.size()));
  }
}

OperatorMatrix OperatorMatrix::identity(FockDim dim) {
  return OperatorMatrix(dim, ComplexMatrix::Identity(dim.index(), dim.index()));
}

OperatorMatrix OperatorMatrix::adjoint() const { return OperatorMatrix(dim_, entries_.adjoint()); }

OperatorMatrix operator*(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_, "operator product");
  return OperatorMatrix(lhs.dim_, lhs.entries_ * rhs.entries_);
}

OperatorMatrix operator+(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_, "operator sum");
  return OperatorMatrix(lhs.dim_, lhs.entries_ + rhs.entries_);
}

OperatorMatrix operator-(const OperatorMatrix& lhs, const OperatorMatrix& rhs) {
  require_same_dim(lhs.dim_, rhs.dim_, "operator difference");
  return OperatorMatrix(lhs.dim_, lhs.entries_ - rhs.entries_);
}

OperatorMatrix operator*(Complex scale, const OperatorMatrix& op) {
  return OperatorMatrix(op.dim_, scale * op.entries_);
}

CoherentParams::CoherentParams(double r, double theta) : r_(r), theta_(theta) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(ErrorCode::invalid_parameter, "coherent modulus r must be finite and >= 0");
  }
  if (!std::isfinite(theta)) throw Error(ErrorCode::invalid_parameter, "coherent phase must be finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (theta_ < 0.0 || theta_ >= two_pi) {
    theta_ = std::fmod(theta_, two_pi);
    if (theta_ < 0.0) theta_ += two_pi;
    if (theta_ >= two_pi) theta_ = 0.0;
  }
}

Complex inner_product(const StateVector& lhs, const StateVector& rhs) {
  require_same_dim(lhs.dim(), rhs.dim(), "inner product");
  return lhs.amplitudes().dot(rhs.amplitudes());
}

double norm(const StateVector& state) { return state.amplitudes().norm(); }

StateVector normalize(const StateVector& state) {
  const double n = norm(state);
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::zero_vector, "cannot normalize a zero vector");
  ComplexVector amps = state.amplitudes() / n;
  return StateVector(state.dim(), std::move(amps), true);
}

StateVector apply(const OperatorMatrix& op, const StateVector& state) {
  require_same_dim(op.dim(), state.dim(), "operator application");
  return StateVector(state.dim(), op.entries() * state.amplitudes());
}

Complex expectation(const OperatorMatrix& op, const StateVector& state) {
  require_same_dim(op.dim(), state.dim(), "expectation");
  return state.amplitudes().dot(op.entries() * state.amplitudes());
}

double fidelity(const StateVector& lhs, const StateVector& rhs) { return std::abs(inner_product(lhs, rhs)); }

}  // namespace spacs
