#include "spacs/operators.hpp"

#include <cmath>
#include <string>

#include "numerics.hpp"
#include "spacs/error.hpp"

namespace spacs {

LadderOps ladder_ops(FockDim dim) {
  const Eigen::Index n = dim.index();
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  ComplexMatrix ad = a.adjoint();
  return {OperatorMatrix(dim, std::move(a)), OperatorMatrix(dim, std::move(ad))};
}

OperatorMatrix number_operator(FockDim dim) {
  const Eigen::Index n = dim.index();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return OperatorMatrix(dim, std::move(m));
}

QuadratureOps quadrature_ops(FockDim dim, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::invalid_parameter, "beam width sigma must be > 0, got " + std::to_string(sigma));
  }
  const auto [a, ad] = ladder_ops(dim);
  const ComplexMatrix x = sigma * (ad.entries() + a.entries());
  const ComplexMatrix p = Complex(0.0, 1.0 / (2.0 * sigma)) * (ad.entries() - a.entries());
  return {OperatorMatrix(dim, x), OperatorMatrix(dim, p)};
}

OperatorMatrix phase_quadrature(FockDim dim, double phi) {
  const auto [a, ad] = ladder_ops(dim);
  const Complex down = std::polar(1.0 / std::sqrt(2.0), -phi);
  const Complex up = std::conj(down);
  return OperatorMatrix(dim, down * a.entries() + up * ad.entries());
}

OperatorMatrix displacement_matrix(Complex beta, FockDim dim) {
  const Eigen::Index n_max = dim.index();
  const double modulus = std::abs(beta);
  if (modulus == 0.0) return OperatorMatrix::identity(dim);

  const double x = modulus * modulus;
  const double log_modulus = std::log(modulus);
  const double phase = std::arg(beta);
  ComplexMatrix d = ComplexMatrix::Zero(n_max, n_max);

  // The recurrence is rescaled whenever it grows past `big`; the running
  // log-scale is folded back into the prefactor.
  constexpr double big = 1e150;

  for (Eigen::Index k = 0; k < n_max; ++k) {
    // unit phases for beta^k e^{i .} and (-beta^*)^k
    const Complex lower_phase = std::polar(1.0, static_cast<double>(k) * phase);
    const Complex upper_phase = (k % 2 == 0 ? 1.0 : -1.0) * std::conj(lower_phase);
    const double kd = static_cast<double>(k);

    double l_prev = 0.0;  // L_{n-1}^{(k)}(x), scaled
    double l_curr = 1.0;  // L_n^{(k)}(x), scaled
    double log_scale = 0.0;
    for (Eigen::Index n = 0; n + k < n_max; ++n) {
      const double nd = static_cast<double>(n);
      if (n == 1) {
        l_prev = l_curr;
        l_curr = (1.0 + kd - x) * l_prev;
      } else if (n > 1) {
        const double next = ((2.0 * (nd - 1.0) + 1.0 + kd - x) * l_curr - (nd - 1.0 + kd) * l_prev) / nd;
        l_prev = l_curr;
        l_curr = next;
      }
      const double mag = std::abs(l_curr);
      if (mag > big) {
        l_curr /= mag;
        l_prev /= mag;
        log_scale += std::log(mag);
      }
      if (l_curr == 0.0) continue;

      const auto m = static_cast<std::size_t>(n + k);
      const double log_pref = 0.5 * (detail::log_factorial(static_cast<std::size_t>(n)) - detail::log_factorial(m)) +
                              kd * log_modulus -
                              0.5 * x + log_scale + std::log(std::abs(l_curr));
      const double value = std::copysign(std::exp(log_pref), l_curr);
      d(n + k, n) = value * lower_phase;
      if (k > 0) d(n, n + k) = value * upper_phase;
    }
  }
  return OperatorMatrix(dim, std::move(d));
}

}  // namespace spacs
