#include "kerrsplit/beam_splitter.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kerrsplit {

TwoModeAmplitudeMatrix::TwoModeAmplitudeMatrix(Eigen::MatrixXcd phi) : phi_(std::move(phi)) {
  if (phi_.rows() == 0 || phi_.rows() != phi_.cols())
    throw std::invalid_argument("TwoModeAmplitudeMatrix: need a non-empty square matrix");
}

TwoModeAmplitudeMatrix split_with_vacuum(const FockVector& state, ReflectionPhase phase) {
  static constexpr std::array<Complex, 4> kPowersOfI{Complex{1, 0}, Complex{0, 1},
                                                     Complex{-1, 0}, Complex{0, -1}};
  const int levels = state.dimension();
  Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(levels, levels);
  for (int n = 0; n < levels; ++n) {
    const Complex c = state[n];
    if (c == 0.0) continue;
    const double log_scale = -0.5 * n * std::numbers::ln2;
    for (int p = 0; p <= n; ++p) {
      const int k = n - p;
      const double weight = std::exp(0.5 * log_binomial(n, p) + log_scale);
      const Complex arm = phase == ReflectionPhase::Quadrature ? kPowersOfI[k % 4] : Complex{1, 0};
      phi(p, k) += c * weight * arm;
    }
  }
  return TwoModeAmplitudeMatrix(std::move(phi));
}

TwoModeAmplitudeMatrix output_at_time(const InitialStateSpec& initial, KerrTime time, int n_cut,
                                      const CutoffPolicy& policy) {
  return split_with_vacuum(kerr_evolve(build_initial(initial, n_cut, policy), time));
}

}  // namespace kerrsplit
