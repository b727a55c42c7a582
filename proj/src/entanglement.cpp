#include "kerrsplit/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace kerrsplit {
namespace {

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues();
}

}  // namespace

SchmidtSpectrum schmidt_spectrum(const TwoModeAmplitudeMatrix& phi) {
  const Eigen::VectorXd sigma = singular_values(phi.matrix());
  SchmidtSpectrum spectrum;
  spectrum.lambdas.reserve(sigma.size());
  for (double s : sigma) spectrum.lambdas.push_back(s * s);
  std::sort(spectrum.lambdas.begin(), spectrum.lambdas.end(), std::greater<>());
  return spectrum;
}

double von_neumann_entropy(const SchmidtSpectrum& spectrum) {
  double entropy = 0.0;
  for (double lambda : spectrum.lambdas)
    if (lambda > 1e-15) entropy -= lambda * std::log2(lambda);
  return std::max(entropy, 0.0);
}

double entanglement_entropy(const TwoModeAmplitudeMatrix& phi) {
  return von_neumann_entropy(schmidt_spectrum(phi));
}

TwoModeDensityMatrix::TwoModeDensityMatrix(int levels, Eigen::MatrixXcd rho)
    : levels_(levels), rho_(std::move(rho)) {
  if (levels <= 0 || rho_.rows() != levels * levels || rho_.cols() != rho_.rows())
    throw std::invalid_argument("TwoModeDensityMatrix: matrix must be levels^2 x levels^2");
}

TwoModeDensityMatrix pure_to_density(const TwoModeAmplitudeMatrix& phi) {
  const int d = phi.levels();
  Eigen::VectorXcd psi(d * d);
  for (int p = 0; p < d; ++p)
    for (int k = 0; k < d; ++k) psi[p * d + k] = phi(p, k);
  return TwoModeDensityMatrix(d, psi * psi.adjoint());
}

TwoModeDensityMatrix partial_transpose(const TwoModeDensityMatrix& rho, Mode mode) {
  const int d = rho.levels();
  TwoModeDensityMatrix out(d, Eigen::MatrixXcd(rho.dimension(), rho.dimension()));
  for (int m1 = 0; m1 < d; ++m1)
    for (int m2 = 0; m2 < d; ++m2)
      for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2)
          out(m1, m2, n1, n2) = mode == Mode::C ? rho(n1, m2, m1, n2) : rho(m1, n2, n1, m2);
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& matrix) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  return solver.eigenvalues();
}

double log_negativity(const TwoModeDensityMatrix& rho, const NegativityOptions& options) {
  const int d = rho.levels();
  std::vector<double> pop_c(d, 0.0);
  std::vector<double> pop_d(d, 0.0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const double pop = rho(a, b, a, b).real();
      pop_c[a] += pop;
      pop_d[b] += pop;
    }
  auto kept_levels = [&](const std::vector<double>& pop) {
    int keep = d;
    while (keep > 1 && pop[keep - 1] < options.support_floor) --keep;
    return keep;
  };
  const int dc = kept_levels(pop_c);
  const int dd = kept_levels(pop_d);

  // Partial transpose restricted to the retained levels, built in place.
  Eigen::MatrixXcd pt(dc * dd, dc * dd);
  for (int a = 0; a < dc; ++a)
    for (int b = 0; b < dd; ++b)
      for (int c = 0; c < dc; ++c)
        for (int e = 0; e < dd; ++e)
          pt(a * dd + b, c * dd + e) =
              options.mode == Mode::C ? rho(c, b, a, e) : rho(a, e, c, b);

  double trace_norm = 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(pt, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success) {
    for (double lambda : solver.eigenvalues())
      trace_norm += std::abs(lambda) >= options.eigen_floor ? std::abs(lambda) : lambda;
  } else {
    // QR iteration cap hit; for a Hermitian matrix the singular values are |lambda|.
    trace_norm = singular_values(pt).sum();
  }
  return std::max(0.0, std::log2(trace_norm));
}

double pure_log_negativity(const TwoModeAmplitudeMatrix& phi) {
  const double sum = singular_values(phi.matrix()).sum();
  return std::max(0.0, 2.0 * std::log2(sum));
}

}  // namespace kerrsplit
