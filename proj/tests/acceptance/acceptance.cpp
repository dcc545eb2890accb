// One line per acceptance criterion: "PASS criterion N: ..." or "FAIL ...".
// `--only N` runs a single criterion; the exit status is nonzero if any
// selected criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "spacs/angles.hpp"
#include "spacs/experiments.hpp"
#include "spacs/measurement.hpp"
#include "spacs/observables.hpp"
#include "spacs/states.hpp"
#include "spacs/truncation.hpp"

namespace {

using namespace spacs;
namespace fs = std::filesystem;

constexpr double pi = std::numbers::pi;

struct Verdict {
  bool passed;
  std::string detail;
};

StateVector pointer(const CoherentParams& alpha, double s = 0.0) {
  return spacs_state(alpha, adaptive_dim(alpha, s, 1e-12), 1e-12);
}

// Closed forms written out here with the normalization passed in, so the
// same pairing can be run with either convention.
double q_closed(double r, double gamma2) {
  const double a2 = r * r;
  return -gamma2 * (1 + 2 * a2 + 2 * a2 * a2) / (1 + 3 * a2 + a2 * a2);
}

double s_closed(double r, double theta, double phi, double gamma2) {
  return gamma2 * gamma2 * (1 - r * r * std::cos(2 * (phi - theta)));
}

double corrected_gamma2(double r) { return 1.0 / (1.0 + r * r); }
double literal_gamma2(double r) { return 1.0 / ((1.0 + r * r) * (1.0 + r * r)); }

Verdict q_reproduction(const std::function<double(double)>& gamma2) {
  double worst = 0.0;
  for (double r : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    for (double theta : {0.0, pi / 9, pi / 2}) {
      worst = std::max(worst, std::abs(mandel_q(pointer(CoherentParams(r, theta))).value - q_closed(r, gamma2(r))));
    }
  }
  const double q0 = mandel_q(pointer(CoherentParams(0.0, 0.0))).value;
  const double q1 = mandel_q(pointer(CoherentParams(1.0, 0.0))).value;
  const double q2 = mandel_q(pointer(CoherentParams(2.0, 0.0))).value;
  const bool endpoints = std::abs(q0 + 1.0) < 1e-8 && std::abs(q1 + 0.5) < 1e-8 && std::abs(q2 + 41.0 / 145.0) < 1e-8;
  std::ostringstream os;
  os << "max |Q - closed form| = " << format_real(worst) << " (tol 1e-8); Q(0) = " << format_real(q0)
     << ", Q(1) = " << format_real(q1) << ", Q(2) = " << format_real(q2);
  return {worst < 1e-8 && endpoints, os.str()};
}

Verdict s_reproduction(const std::function<double(double)>& gamma2) {
  double worst = 0.0;
  for (double r : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    for (double theta : {0.0, pi / 4, pi / 2}) {
      const StateVector psi = pointer(CoherentParams(r, theta));
      for (double phi : {0.0, pi / 4, pi / 2}) {
        worst = std::max(worst, std::abs(squeezing(psi, phi).value - s_closed(r, theta, phi, gamma2(r))));
      }
    }
  }
  const double s_aligned = squeezing(pointer(CoherentParams(2.0, pi / 4)), pi / 4).value;
  std::ostringstream os;
  os << "45 points, max |S - closed form| = " << format_real(worst) << " (tol 1e-8); S(r=2, phi=theta) = "
     << format_real(s_aligned);
  return {worst < 1e-8 && std::abs(s_aligned + 0.12) < 1e-8, os.str()};
}

Verdict branch_identity() {
  const FockDim dim(40);
  double worst = 0.0;
  for (double s : {0.1, 1.0, 2.0}) {
    const ComplexMatrix diff = joint_unitary(s, dim) - branch_decomposition(s, dim);
    for (Eigen::Index bi = 0; bi < 2; ++bi) {
      for (Eigen::Index bj = 0; bj < 2; ++bj) {
        worst = std::max(worst, diff.block(bi * 40, bj * 40, 20, 20).cwiseAbs().maxCoeff());
      }
    }
  }
  return {worst < 1e-8, "s in {0.1, 1, 2}, dim 40, max entry deviation = " + format_real(worst) + " (tol 1e-8)"};
}

Verdict oracle_consistency() {
  double worst_infidelity = 0.0;
  double worst_beta = 0.0;
  int points = 0;
  for (double r : {0.5, 2.0, 4.0}) {
    for (double s : {0.1, 1.0, 2.0}) {
      const FockDim dim = adaptive_dim(CoherentParams(r, 0.0), s, 1e-12);
      const JointEvolutionOracle oracle(s, dim);
      const MeasurementConfig m(s);
      for (double theta : {0.0, pi / 9, pi / 2}) {
        const CoherentParams alpha(r, theta);
        const StateVector psi = spacs_state(alpha, dim, 1e-12);
        for (double delta : {0.0, pi / 4}) {
          for (double phi : {pi / 9, pi / 3, 2 * pi / 3}) {
            const SelectionConfig sel(phi, delta);
            const WeakValue w = weak_value(sel);
            const PointerOutcome main = final_pointer_outcome(psi, w, m);
            worst_infidelity = std::max(worst_infidelity, 1.0 - fidelity(main.state, oracle.project(psi, sel).state));
            worst_beta = std::max(worst_beta, std::abs(analytic_beta(alpha, w, s) - 1.0 / main.branch_norm));
            ++points;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << points << " points; max infidelity = " << format_real(worst_infidelity)
     << " (tol 1e-9); max |beta - 1/norm| = " << format_real(worst_beta) << " (tol 1e-8)";
  return {points == 162 && worst_infidelity < 1e-9 && worst_beta < 1e-8, os.str()};
}

Verdict baselines() {
  double worst_q = 0.0;
  double worst_s = 0.0;
  for (double r : {0.5, 1.0, 2.0, 4.0}) {
    for (double theta : {0.0, pi / 9, pi / 2}) {
      const CoherentParams alpha(r, theta);
      const StateVector coh = coherent_state(alpha, adaptive_dim(alpha, 0.0, 1e-12), 1e-12);
      worst_q = std::max(worst_q, std::abs(mandel_q(coh).value));
      for (double phi = 0.0; phi < pi; phi += pi / 8) worst_s = std::max(worst_s, std::abs(squeezing(coh, phi).value));
    }
  }
  bool fock_exact = true;
  for (std::size_t n = 1; n < 30; ++n) fock_exact = fock_exact && mandel_q(StateVector::basis(FockDim(32), n)).value == -1.0;
  std::ostringstream os;
  os << "coherent max|Q| = " << format_real(worst_q) << " (tol 1e-9), max|S| = " << format_real(worst_s)
     << " (tol 1e-10); Fock Q == -1: " << (fock_exact ? "yes" : "no");
  return {worst_q < 1e-9 && worst_s < 1e-10 && fock_exact, os.str()};
}

Verdict trends() {
  const TrendReport report = trend_checks(4);
  std::ostringstream os;
  for (const auto& a : report.assertions) {
    os << "\n    (" << a.id << ") " << (a.passed ? "pass" : "FAIL") << " " << a.name << ": " << a.detail;
  }
  return {report.all_passed(), "trend assertions:" + os.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Verdict determinism() {
  const fs::path dir = fs::temp_directory_path() / "spacs_acceptance";
  fs::create_directories(dir);
  const std::string cli = SPACS_CLI_PATH;
  auto run_fig = [&](const std::string& env, const std::string& name) {
    const fs::path out = dir / name;
    const std::string cmd = env + " \"" + cli + "\" figure fig2a --out \"" + out.string() + "\" > /dev/null";
    const int rc = std::system(cmd.c_str());
    return std::make_pair(rc, slurp(out));
  };
  const auto first = run_fig("", "first.csv");
  const auto second = run_fig("", "second.csv");
  const auto serial = run_fig("SPACS_THREADS=1", "serial.csv");
  const auto wide = run_fig("SPACS_THREADS=8", "wide.csv");

  const SweepSpec spec = figure_preset(FigureId::fig2a);
  const std::string lib_serial = render(to_table(run_sweep(spec, 1)), OutputFormat::csv);
  const std::string lib_parallel = render(to_table(run_sweep(spec, 6)), OutputFormat::csv);

  const bool ok_runs = first.first == 0 && second.first == 0 && serial.first == 0 && wide.first == 0;
  const bool same = !first.second.empty() && first.second == second.second && first.second == serial.second &&
                    first.second == wide.second && lib_serial == lib_parallel && lib_serial == first.second;
  std::ostringstream os;
  os << "figure fig2a: " << first.second.size() << " bytes; repeated runs "
     << (first.second == second.second ? "identical" : "differ") << "; SPACS_THREADS=1 vs 8 "
     << (serial.second == wide.second ? "identical" : "differ") << "; library 1 vs 6 threads "
     << (lib_serial == lib_parallel ? "identical" : "differ");
  return {ok_runs && same, os.str()};
}

Verdict fault_sensitivity() {
  const Verdict q = q_reproduction(literal_gamma2);
  const Verdict s = s_reproduction(literal_gamma2);
  // the library's own fault switch must trip as well
  const CoherentParams a(2.0, 0.0);
  const bool library_trips =
      std::abs(mandel_q(pointer(a)).value - analytic_q_initial(a, GammaConvention::literal).value) > 1e-8 &&
      std::abs(squeezing(pointer(a), 0.0).value - analytic_s_initial(a, 0.0, GammaConvention::literal).value) > 1e-8;
  return {!q.passed && !s.passed && library_trips,
          std::string("with gamma = 1/(1+|alpha|^2): criterion 1 ") + (q.passed ? "still passes" : "fails") +
              " [" + q.detail + "]; criterion 2 " + (s.passed ? "still passes" : "fails") + " [" + s.detail + "]"};
}

struct Criterion {
  int id;
  double budget_seconds;  // 0 = no runtime bound
  std::function<Verdict()> body;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  const std::vector<Criterion> criteria = {
      {1, 1.0, [] { return q_reproduction(corrected_gamma2); }},
      {2, 1.0, [] { return s_reproduction(corrected_gamma2); }},
      {3, 5.0, branch_identity},
      {4, 60.0, oracle_consistency},
      {5, 0.0, baselines},
      {6, 0.0, trends},
      {7, 0.0, determinism},
      {8, 0.0, fault_sensitivity},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_seconds == 0.0 || seconds < c.budget_seconds;
    const bool passed = v.passed && in_time;
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << v.detail << " [" << format_real(seconds)
              << " s";
    if (c.budget_seconds > 0.0) std::cout << ", budget " << c.budget_seconds << " s";
    std::cout << "]\n";
    if (!passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
