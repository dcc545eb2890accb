#include "spacs/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spacs/error.hpp"
#include "spacs/matrix_exp.hpp"
#include "spacs/operators.hpp"
#include "spacs/states.hpp"

namespace spacs {

SelectionConfig::SelectionConfig(double phi_pre, double delta) : phi_pre_(phi_pre), delta_(delta) {
  if (!std::isfinite(phi_pre) || !std::isfinite(delta)) {
    throw Error(ErrorCode::invalid_parameter, "selection angles must be finite");
  }
  if (phi_pre == std::numbers::pi) {
    throw Error(ErrorCode::undefined_weak_value,
                "phi_pre = pi makes pre- and postselection orthogonal; the weak value is undefined");
  }
  if (phi_pre < 0.0 || phi_pre > std::numbers::pi) {
    throw Error(ErrorCode::invalid_parameter, "phi_pre must lie in [0, pi), got " + std::to_string(phi_pre));
  }
}

MeasurementConfig::MeasurementConfig(double s, TruncationPolicy truncation) : s_(s), truncation_(truncation) {
  if (!std::isfinite(s) || s < 0.0) {
    throw Error(ErrorCode::invalid_parameter, "coupling strength s must be finite and >= 0");
  }
  if (!(truncation_.tol > 0.0)) throw Error(ErrorCode::invalid_parameter, "truncation tolerance must be > 0");
}

WeakValue weak_value(const SelectionConfig& sel) {
  return {std::polar(std::tan(sel.phi_pre() / 2.0), sel.delta())};
}

double naive_postselection_probability(const SelectionConfig& sel) {
  const double c = std::cos(sel.phi_pre() / 2.0);
  return c * c;
}

PointerOutcome final_pointer_outcome(const StateVector& pointer, const WeakValue& w, const MeasurementConfig& m) {
  const FockDim dim = pointer.dim();
  const Complex plus = 1.0 + w.value;
  const Complex minus = 1.0 - w.value;

  if (m.s() == 0.0) {
    // both branches are the identity
    const double branch_norm = std::abs(plus + minus) * norm(pointer);
    return {normalize(pointer), branch_norm, 0.0};
  }

  const ComplexVector& psi = pointer.amplitudes();
  const double psi_norm2 = psi.squaredNorm();
  const ComplexVector forward = displacement_matrix(Complex(m.s() / 2.0, 0.0), dim).entries() * psi;
  const ComplexVector backward = displacement_matrix(Complex(-m.s() / 2.0, 0.0), dim).entries() * psi;
  const double tail = std::max(psi_norm2 - forward.squaredNorm(), psi_norm2 - backward.squaredNorm()) / psi_norm2;
  if (tail > m.truncation().tol) {
    throw Error(ErrorCode::truncation_insufficient, "displaced pointer loses mass " + std::to_string(tail) +
                                                        " at dimension " + std::to_string(dim.size()));
  }

  ComplexVector combined = plus * forward + minus * backward;
  const double branch_norm = combined.norm();
  const double scale = (std::abs(plus) + std::abs(minus)) * std::sqrt(psi_norm2);
  if (!(branch_norm > 1e-14 * scale)) {
    throw Error(ErrorCode::degenerate_postselection, "displaced branches cancel; postselected pointer vanishes");
  }
  combined /= branch_norm;
  return {StateVector(dim, std::move(combined), true), branch_norm, std::max(tail, 0.0)};
}

StateVector final_pointer_state(const StateVector& pointer, const WeakValue& w, const MeasurementConfig& m) {
  return final_pointer_outcome(pointer, w, m).state;
}

double analytic_beta(const CoherentParams& alpha, const WeakValue& w, double s) {
  const Complex a = alpha.alpha();
  const Complex wv = w.value;
  const double gamma2 = 1.0 / (1.0 + alpha.modulus_squared());
  const Complex overlap = std::polar(1.0, 2.0 * s * a.imag()) * (1.0 + (std::conj(a) + s) * (a - s));
  const double cross = (std::conj(1.0 + wv) * (1.0 - wv) * overlap).real();
  const double bracket = 1.0 + std::norm(wv) + gamma2 * std::exp(-s * s / 2.0) * cross;
  return 1.0 / (std::sqrt(2.0) * std::sqrt(bracket));
}

double true_postselection_probability(const StateVector& pointer, const SelectionConfig& sel,
                                      const MeasurementConfig& m) {
  const PointerOutcome outcome = final_pointer_outcome(pointer, weak_value(sel), m);
  return naive_postselection_probability(sel) * outcome.branch_norm * outcome.branch_norm / 4.0;
}

ComplexMatrix joint_unitary(double s, FockDim dim) {
  if (!std::isfinite(s) || s < 0.0) throw Error(ErrorCode::invalid_parameter, "s must be finite and >= 0");
  const Eigen::Index n = dim.index();
  const ComplexMatrix p = quadrature_ops(dim, 1.0).momentum.entries();
  ComplexMatrix generator = ComplexMatrix::Zero(2 * n, 2 * n);
  const Complex coeff(0.0, -s);
  generator.block(0, n, n, n) = coeff * p;
  generator.block(n, 0, n, n) = coeff * p;
  return matrix_exponential(generator);
}

ComplexMatrix branch_decomposition(double s, FockDim dim) {
  const Eigen::Index n = dim.index();
  const ComplexMatrix plus = displacement_matrix(Complex(s / 2.0, 0.0), dim).entries();
  const ComplexMatrix minus = displacement_matrix(Complex(-s / 2.0, 0.0), dim).entries();
  ComplexMatrix out(2 * n, 2 * n);
  // (I + sigma_x)/2 = [[1,1],[1,1]]/2, (I - sigma_x)/2 = [[1,-1],[-1,1]]/2
  out.block(0, 0, n, n) = 0.5 * (plus + minus);
  out.block(n, n, n, n) = 0.5 * (plus + minus);
  out.block(0, n, n, n) = 0.5 * (plus - minus);
  out.block(n, 0, n, n) = 0.5 * (plus - minus);
  return out;
}

namespace {

FockDim padded(FockDim dim) {
  if (dim.size() > oracle_max_dim) {
    throw Error(ErrorCode::oracle_dimension_exceeded, "oracle supports pointer dimension <= " +
                                                          std::to_string(oracle_max_dim) + ", got " +
                                                          std::to_string(dim.size()));
  }
  return FockDim(dim.size() + dim.size() / 2);
}

}  // namespace

JointEvolutionOracle::JointEvolutionOracle(double s, FockDim pointer_dim)
    : s_(s), pointer_dim_(pointer_dim), padded_dim_(padded(pointer_dim)), propagator_(joint_unitary(s, padded_dim_)) {}

OracleOutcome JointEvolutionOracle::project(const StateVector& pointer, const SelectionConfig& sel) const {
  if (pointer.dim() != pointer_dim_) {
    throw Error(ErrorCode::dimension_mismatch, "pointer dimension differs from oracle dimension");
  }
  const Eigen::Index n = pointer_dim_.index();
  const Eigen::Index np = padded_dim_.index();
  const Complex h = std::cos(sel.phi_pre() / 2.0);
  const Complex v = std::polar(std::sin(sel.phi_pre() / 2.0), sel.delta());

  ComplexVector joint = ComplexVector::Zero(2 * np);
  joint.segment(0, n) = h * pointer.amplitudes();
  joint.segment(np, n) = v * pointer.amplitudes();
  const ComplexVector evolved = propagator_ * joint;

  // <H| projection, then back to the pointer basis (the padding carries only
  // the truncation tail)
  ComplexVector projected = evolved.segment(0, n);
  const double probability = projected.squaredNorm();
  if (!(probability > 0.0)) {
    throw Error(ErrorCode::degenerate_postselection, "oracle projection vanished");
  }
  projected /= std::sqrt(probability);
  return {StateVector(pointer_dim_, std::move(projected), true), probability};
}

OracleOutcome joint_evolution_project(const StateVector& pointer, const SelectionConfig& sel,
                                      const MeasurementConfig& m) {
  return JointEvolutionOracle(m.s(), pointer.dim()).project(pointer, sel);
}

}  // namespace spacs
