#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "kerrsplit/beam_splitter.hpp"
#include "kerrsplit/fock.hpp"

namespace kerrsplit::testing {

/// Seeded generators for property tests; every case is reproducible from its seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Complex complex_normal() {
    std::normal_distribution<double> n;
    return {n(rng_), n(rng_)};
  }

  InitialStateSpec initial(double nu_max, int m_max) {
    return {uniform(0.0, nu_max), uniform(-M_PI, M_PI), integer(0, m_max)};
  }

  FockVector fock_vector(int n_cut) {
    Eigen::VectorXcd v(n_cut + 1);
    for (auto& c : v) c = complex_normal();
    return FockVector(v / v.norm());
  }

  TwoModeAmplitudeMatrix amplitude_matrix(int n_cut) {
    Eigen::MatrixXcd m(n_cut + 1, n_cut + 1);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = complex_normal();
    return TwoModeAmplitudeMatrix(m / m.norm());
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kerrsplit::testing
