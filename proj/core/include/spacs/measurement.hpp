#pragma once

// Postselected von Neumann measurement of sigma_x on a polarization qubit
// with the pointer mode as measuring device. The impulsive interaction
// exp(-i g sigma_x (x) P) with P = (i / 2 sigma)(a^dagger - a) splits into
//   1/2 (I + sigma_x) (x) D(s/2) + 1/2 (I - sigma_x) (x) D(-s/2),  s = g / sigma,
// so postselecting |H> leaves the pointer in
//   beta [(1 + w) D(s/2) + (1 - w) D(-s/2)] |Psi>
// with w the weak value of sigma_x.

#include "spacs/fock.hpp"
#include "spacs/truncation.hpp"

namespace spacs {

/// Preselection |psi_i> = cos(phi/2)|H> + e^{i delta} sin(phi/2)|V>;
/// postselection is |H>. Requires 0 <= phi_pre < pi.
class SelectionConfig {
 public:
  SelectionConfig(double phi_pre, double delta);

  double phi_pre() const noexcept { return phi_pre_; }
  double delta() const noexcept { return delta_; }

 private:
  double phi_pre_;
  double delta_;
};

struct WeakValue {
  Complex value;
};

class MeasurementConfig {
 public:
  explicit MeasurementConfig(double s, TruncationPolicy truncation = {});

  double s() const noexcept { return s_; }
  const TruncationPolicy& truncation() const noexcept { return truncation_; }

 private:
  double s_;
  TruncationPolicy truncation_;
};

/// <H|sigma_x|psi_i> / <H|psi_i> = e^{i delta} tan(phi/2).
WeakValue weak_value(const SelectionConfig& sel);

/// |<H|psi_i>|^2 = cos^2(phi/2), ignoring the interaction.
double naive_postselection_probability(const SelectionConfig& sel);

/// Pointer after postselection together with its diagnostics.
struct PointerOutcome {
  StateVector state;          // normalized
  double branch_norm = 0.0;   // || (1+w) D(s/2)|Psi> + (1-w) D(-s/2)|Psi> ||
  double tail_mass = 0.0;     // largest probability lost by either displaced branch
};

/// Builds the two displaced branches from the analytic displacement matrix
/// and normalizes numerically. Throws truncation_insufficient if a branch
/// loses more than m.truncation().tol and degenerate_postselection if the
/// branches cancel.
PointerOutcome final_pointer_outcome(const StateVector& pointer, const WeakValue& w, const MeasurementConfig& m);

StateVector final_pointer_state(const StateVector& pointer, const WeakValue& w, const MeasurementConfig& m);

/// Closed-form normalization beta for a SPACS pointer:
///   beta = 1/sqrt(2) [1 + |w|^2 + gamma^2 e^{-s^2/2}
///            Re((1+w)^* (1-w) e^{2 i s Im alpha} (1 + (alpha^* + s)(alpha - s)))]^{-1/2}
/// with gamma^2 = 1 / (1 + |alpha|^2). Under this grouping beta equals
/// 1 / branch_norm exactly: the 1/sqrt(2) absorbs |1+w|^2 + |1-w|^2 = 2(1+|w|^2).
double analytic_beta(const CoherentParams& alpha, const WeakValue& w, double s);

/// ||(<H| (x) I) U |psi_i>|Psi>||^2 = cos^2(phi/2) branch_norm^2 / 4.
double true_postselection_probability(const StateVector& pointer, const SelectionConfig& sel,
                                      const MeasurementConfig& m);

/// exp(-i s sigma_x (x) P) on the 2 dim joint space (sigma = 1), by dense
/// scaling and squaring. Joint index = polarization * dim + n, H = 0, V = 1.
ComplexMatrix joint_unitary(double s, FockDim dim);

/// The right-hand side of the branch decomposition,
/// 1/2 (I + sigma_x) (x) D(s/2) + 1/2 (I - sigma_x) (x) D(-s/2), same layout.
ComplexMatrix branch_decomposition(double s, FockDim dim);

inline constexpr std::size_t oracle_max_dim = 512;

struct OracleOutcome {
  StateVector state;   // normalized projected pointer
  double probability;  // postselection probability
};

/// Reference evolution that shares no code with final_pointer_state: it
/// exponentiates the joint generator directly and projects onto |H>. The
/// propagator is computed once on a padded basis (1.5x the pointer
/// dimension) so truncation of the generator stays away from the retained
/// levels, then reused for any number of selections.
class JointEvolutionOracle {
 public:
  JointEvolutionOracle(double s, FockDim pointer_dim);

  OracleOutcome project(const StateVector& pointer, const SelectionConfig& sel) const;

  double s() const noexcept { return s_; }
  FockDim pointer_dim() const noexcept { return pointer_dim_; }
  FockDim padded_dim() const noexcept { return padded_dim_; }

 private:
  double s_;
  FockDim pointer_dim_;
  FockDim padded_dim_;
  ComplexMatrix propagator_;
};

OracleOutcome joint_evolution_project(const StateVector& pointer, const SelectionConfig& sel,
                                      const MeasurementConfig& m);

}  // namespace spacs
