#include "spacs/matrix_exp.hpp"

#include <array>
#include <cmath>

#include <Eigen/LU>

#include "spacs/error.hpp"

namespace spacs {
namespace {

struct PadeTerms {
  ComplexMatrix u;  // odd part
  ComplexMatrix v;  // even part
};

template <std::size_t N>
PadeTerms pade_low(const ComplexMatrix& a, const std::array<double, N>& b) {
  // degree m = N - 1 with m in {3, 5, 7, 9}
  const Eigen::Index n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix power = ident;
  ComplexMatrix odd = b[1] * ident;
  ComplexMatrix even = b[0] * ident;
  for (std::size_t k = 2; k < N; k += 2) {
    power = power * a2;
    even += b[k] * power;
    odd += b[k + 1] * power;
  }
  return {a * odd, even};
}

PadeTerms pade13(const ComplexMatrix& a) {
  static constexpr std::array<double, 14> b = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                               670442572800.0,      33522128640.0,       1323241920.0,
                                               40840800.0,          960960.0,            16380.0,
                                               182.0,               1.0};
  const Eigen::Index n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix odd_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const ComplexMatrix odd = a6 * odd_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
  const ComplexMatrix even_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  ComplexMatrix even = a6 * even_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
  return {a * odd, std::move(even)};
}

ComplexMatrix solve_pade(const PadeTerms& t) {
  const ComplexMatrix numer = t.v + t.u;
  const ComplexMatrix denom = t.v - t.u;
  return denom.partialPivLu().solve(numer);
}

}  // namespace

ComplexMatrix matrix_exponential(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::dimension_mismatch, "matrix exponential needs a square matrix");
  if (a.rows() == 0) return a;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (!std::isfinite(norm1)) throw Error(ErrorCode::invalid_parameter, "matrix exponential of non-finite matrix");

  if (norm1 <= 1.495585217958292e-2) {
    return solve_pade(pade_low(a, std::array<double, 4>{120.0, 60.0, 12.0, 1.0}));
  }
  if (norm1 <= 2.539398330063230e-1) {
    return solve_pade(pade_low(a, std::array<double, 6>{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0}));
  }
  if (norm1 <= 9.504178996162932e-1) {
    return solve_pade(
        pade_low(a, std::array<double, 8>{17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0}));
  }
  if (norm1 <= 2.097847961257068) {
    return solve_pade(pade_low(a, std::array<double, 10>{17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                                         30270240.0, 2162160.0, 110880.0, 3960.0, 90.0, 1.0}));
  }

  constexpr double theta13 = 5.371920351148152;
  int squarings = 0;
  if (norm1 > theta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  const ComplexMatrix scaled = a / std::ldexp(1.0, squarings);
  ComplexMatrix result = solve_pade(pade13(scaled));
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

}  // namespace spacs
