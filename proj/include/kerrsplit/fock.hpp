#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace kerrsplit {

using Complex = std::complex<double>;

/// How aggressively the infinite Fock expansion is truncated.
struct CutoffPolicy {
  double tail_tol = 1e-12;  ///< probability mass allowed above the cutoff
  int safety_margin = 5;    ///< levels added on top of the tail estimate

  void validate() const;
};

/// Initial single-mode state: the m-photon-added coherent state built on
/// alpha = sqrt(nu) e^{i theta}. m = 0 is the plain coherent state.
struct InitialStateSpec {
  double nu = 0.0;
  double theta = std::numbers::pi / 4.0;
  int m = 0;

  Complex alpha() const;
  void validate() const;
};

/// Single-mode pure state over Fock levels 0..n_cut.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(Eigen::VectorXcd amplitudes);

  /// Fock state |n> embedded in levels 0..n_cut.
  static FockVector basis(int n, int n_cut);

  int n_cut() const noexcept { return static_cast<int>(amplitudes_.size()) - 1; }
  int dimension() const noexcept { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](int n) const { return amplitudes_[n]; }

  double norm_squared() const { return amplitudes_.squaredNorm(); }
  double mean_photon_number() const;

 private:
  Eigen::VectorXcd amplitudes_;
};

double log_factorial(int n);
double log_binomial(int n, int k);

/// Probability mass of the untruncated photon-added coherent state on levels
/// strictly above `level`.
double tail_mass_above(double nu, int m, int level);

/// Smallest N whose exact tail mass above N is below tail_tol, plus the
/// policy's safety margin.
int choose_cutoff(double nu, int m, const CutoffPolicy& policy = {});

/// |alpha> truncated to 0..n_cut and renormalized. Ignores spec.m.
/// Throws CutoffTooSmall when the dropped mass exceeds policy.tail_tol.
FockVector coherent_state(const InitialStateSpec& spec, int n_cut,
                          const CutoffPolicy& policy = {});

/// N a^{dag m}|alpha>, normalized numerically over the truncated basis.
FockVector photon_added_coherent_state(const InitialStateSpec& spec, int n_cut,
                                       const CutoffPolicy& policy = {});

/// Coherent state for m = 0, photon-added otherwise.
FockVector build_initial(const InitialStateSpec& spec, int n_cut,
                         const CutoffPolicy& policy = {});

/// <a|b>, zero-padding the shorter vector.
Complex inner_product(const FockVector& a, const FockVector& b);

}  // namespace kerrsplit
