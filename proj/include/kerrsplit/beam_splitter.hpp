#pragma once

#include "kerrsplit/fock.hpp"
#include "kerrsplit/kerr.hpp"

namespace kerrsplit {

/// Pure two-mode state; phi(p, k) is the amplitude of |p>_c |k>_d.
class TwoModeAmplitudeMatrix {
 public:
  TwoModeAmplitudeMatrix() = default;
  explicit TwoModeAmplitudeMatrix(Eigen::MatrixXcd phi);

  int n_cut() const noexcept { return static_cast<int>(phi_.rows()) - 1; }
  int levels() const noexcept { return static_cast<int>(phi_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return phi_; }
  Complex operator()(int p, int k) const { return phi_(p, k); }
  double norm() const { return phi_.norm(); }

 private:
  Eigen::MatrixXcd phi_;
};

/// Phase on the reflected (d) arm. Quadrature maps |alpha>|0> to
/// |alpha/sqrt2>_c |i alpha/sqrt2>_d; Omitted drops the i^k factor, which is a
/// local unitary on mode d.
enum class ReflectionPhase { Quadrature, Omitted };

/// 50/50 beam splitter with vacuum on the second input port.
TwoModeAmplitudeMatrix split_with_vacuum(const FockVector& state,
                                         ReflectionPhase phase = ReflectionPhase::Quadrature);

/// split_with_vacuum(kerr_evolve(build_initial(initial), time)).
TwoModeAmplitudeMatrix output_at_time(const InitialStateSpec& initial, KerrTime time, int n_cut,
                                      const CutoffPolicy& policy = {});

}  // namespace kerrsplit
