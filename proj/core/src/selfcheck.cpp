#include "spacs/selfcheck.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "spacs/angles.hpp"
#include "spacs/error.hpp"
#include "spacs/experiments.hpp"
#include "spacs/measurement.hpp"
#include "spacs/operators.hpp"
#include "spacs/states.hpp"
#include "spacs/truncation.hpp"

namespace spacs {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double pairing_tol = 1e-8;

struct Outcome {
  bool passed;
  std::string detail;
};

CheckResult timed(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {name, out.passed, out.detail, seconds};
}

StateVector adaptive_spacs(const CoherentParams& alpha, double s = 0.0) {
  return spacs_state(alpha, adaptive_dim(alpha, s, 1e-12), 1e-12);
}

Outcome q_pairing(GammaConvention gamma) {
  double worst = 0.0;
  for (double r : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    for (double theta : {0.0, pi / 9, pi / 2}) {
      const CoherentParams alpha(r, theta);
      worst = std::max(worst, std::abs(mandel_q(adaptive_spacs(alpha)).value - analytic_q_initial(alpha, gamma).value));
    }
  }
  return {worst < pairing_tol, "max |Q_numeric - Q_closed| = " + format_real(worst)};
}

Outcome s_pairing(GammaConvention gamma) {
  double worst = 0.0;
  for (double r : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    for (double theta : {0.0, pi / 9, pi / 2}) {
      const CoherentParams alpha(r, theta);
      const StateVector psi = adaptive_spacs(alpha);
      for (double phi : {0.0, pi / 4, pi / 2}) {
        worst = std::max(worst, std::abs(squeezing(psi, phi).value - analytic_s_initial(alpha, phi, gamma).value));
      }
    }
  }
  return {worst < pairing_tol, "max |S_numeric - S_closed| = " + format_real(worst)};
}

Outcome branch_identity() {
  const FockDim dim(40);
  const Eigen::Index n = dim.index();
  const Eigen::Index h = n / 2;
  double worst = 0.0;
  for (double s : {0.1, 1.0, 2.0}) {
    const ComplexMatrix diff = joint_unitary(s, dim) - branch_decomposition(s, dim);
    for (Eigen::Index bi = 0; bi < 2; ++bi) {
      for (Eigen::Index bj = 0; bj < 2; ++bj) {
        worst = std::max(worst, diff.block(bi * n, bj * n, h, h).cwiseAbs().maxCoeff());
      }
    }
  }
  return {worst < 1e-8, "max entry deviation = " + format_real(worst)};
}

Outcome oracle_grid() {
  double worst_infidelity = 0.0;
  double worst_prob = 0.0;
  double worst_beta = 0.0;
  int points = 0;
  for (double r : {0.5, 2.0, 4.0}) {
    for (double s : {0.1, 1.0, 2.0}) {
      const FockDim dim = adaptive_dim(CoherentParams(r, 0.0), s, 1e-12);
      const JointEvolutionOracle oracle(s, dim);
      const MeasurementConfig m(s, TruncationPolicy{1e-12, std::nullopt, default_max_dim});
      for (double theta : {0.0, pi / 9, pi / 2}) {
        const CoherentParams alpha(r, theta);
        const StateVector pointer = spacs_state(alpha, dim, 1e-12);
        for (double delta : {0.0, pi / 4}) {
          for (double phi : {pi / 9, pi / 3, 2 * pi / 3}) {
            const SelectionConfig sel(phi, delta);
            const WeakValue w = weak_value(sel);
            const PointerOutcome main = final_pointer_outcome(pointer, w, m);
            const OracleOutcome ref = oracle.project(pointer, sel);
            const double prob = naive_postselection_probability(sel) * main.branch_norm * main.branch_norm / 4.0;
            worst_infidelity = std::max(worst_infidelity, 1.0 - fidelity(main.state, ref.state));
            worst_prob = std::max(worst_prob, std::abs(prob - ref.probability));
            worst_beta = std::max(worst_beta, std::abs(analytic_beta(alpha, w, s) - 1.0 / main.branch_norm));
            ++points;
          }
        }
      }
    }
  }
  const bool passed = points == 162 && worst_infidelity < 1e-9 && worst_prob < 1e-9 && worst_beta < 1e-8;
  std::ostringstream os;
  os << points << " points; max infidelity = " << format_real(worst_infidelity)
     << "; max |P_true - P_oracle| = " << format_real(worst_prob)
     << "; max |beta_closed - 1/norm| = " << format_real(worst_beta);
  return {passed, os.str()};
}

Outcome baselines() {
  double worst_q = 0.0;
  double worst_s = 0.0;
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    for (double theta : {0.0, pi / 9, pi / 2}) {
      const CoherentParams alpha(r, theta);
      const StateVector coh = coherent_state(alpha, adaptive_dim(alpha, 0.0, 1e-12), 1e-12);
      worst_q = std::max(worst_q, std::abs(mandel_q(coh).value));
      for (double phi : {0.0, pi / 4, pi / 2, 2.0}) worst_s = std::max(worst_s, std::abs(squeezing(coh, phi).value));
    }
  }
  bool fock_exact = true;
  const FockDim dim(16);
  for (std::size_t n = 1; n < 16; ++n) fock_exact = fock_exact && mandel_q(StateVector::basis(dim, n)).value == -1.0;
  return {worst_q < 1e-9 && worst_s < 1e-10 && fock_exact,
          "coherent max|Q| = " + format_real(worst_q) + ", max|S| = " + format_real(worst_s) +
              (fock_exact ? "; Fock Q = -1 exactly" : "; Fock Q deviates from -1")};
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  std::vector<CheckResult> results;
  results.push_back(timed("mandel-q-closed-form", [&] { return q_pairing(options.gamma); }));
  results.push_back(timed("squeezing-closed-form", [&] { return s_pairing(options.gamma); }));
  results.push_back(timed("branch-decomposition-identity", branch_identity));
  if (!options.quick) results.push_back(timed("joint-evolution-oracle-grid", oracle_grid));
  results.push_back(timed("coherent-and-fock-baselines", baselines));

  const auto start = std::chrono::steady_clock::now();
  const TrendReport trends = trend_checks(options.threads);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& a : trends.assertions) {
    results.push_back({"trend-" + std::to_string(a.id) + " " + a.name, a.passed, a.detail, seconds});
  }
  return results;
}

}  // namespace spacs
