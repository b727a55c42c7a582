#pragma once

#include <vector>

#include "kerrsplit/beam_splitter.hpp"

namespace kerrsplit {

/// Eigenvalues of either reduced density matrix, descending.
struct SchmidtSpectrum {
  std::vector<double> lambdas;
};

SchmidtSpectrum schmidt_spectrum(const TwoModeAmplitudeMatrix& phi);

/// -sum lambda log2 lambda in ebits; lambdas below 1e-15 contribute nothing.
double von_neumann_entropy(const SchmidtSpectrum& spectrum);

/// von_neumann_entropy(schmidt_spectrum(phi)).
double entanglement_entropy(const TwoModeAmplitudeMatrix& phi);

enum class Mode { C, D };

/// Two-mode operator on the product Fock basis, flattened as (m1, m2) -> m1 * levels + m2.
class TwoModeDensityMatrix {
 public:
  TwoModeDensityMatrix() = default;
  TwoModeDensityMatrix(int levels, Eigen::MatrixXcd rho);

  int levels() const noexcept { return levels_; }
  int dimension() const noexcept { return levels_ * levels_; }
  const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }

  int index(int first, int second) const noexcept { return first * levels_ + second; }
  Complex operator()(int m1, int m2, int n1, int n2) const {
    return rho_(index(m1, m2), index(n1, n2));
  }
  Complex& operator()(int m1, int m2, int n1, int n2) { return rho_(index(m1, m2), index(n1, n2)); }

  Complex trace() const { return rho_.trace(); }

 private:
  int levels_ = 0;
  Eigen::MatrixXcd rho_;
};

TwoModeDensityMatrix pure_to_density(const TwoModeAmplitudeMatrix& phi);

/// Index swap on the selected mode; the result is Hermitian but may have
/// negative eigenvalues.
TwoModeDensityMatrix partial_transpose(const TwoModeDensityMatrix& rho, Mode mode = Mode::C);

/// Eigenvalues of a Hermitian matrix, ascending. Only the lower triangle is read.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& matrix);

struct NegativityOptions {
  /// Fock levels of a mode whose reduced population is below this are dropped
  /// before the partial transpose is formed. 0 keeps every level.
  double support_floor = 1e-20;
  /// Eigenvalues with magnitude below this enter the trace norm with their sign.
  double eigen_floor = 1e-12;
  Mode mode = Mode::C;
};

/// log2 of the trace norm of the partial transpose, clipped at 0. Uses the
/// singular values when the eigensolver does not converge.
double log_negativity(const TwoModeDensityMatrix& rho, const NegativityOptions& options = {});

/// Pure-state closed form 2 log2(sum_i sigma_i) over the singular values of phi.
double pure_log_negativity(const TwoModeAmplitudeMatrix& phi);

}  // namespace kerrsplit
