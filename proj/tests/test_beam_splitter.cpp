#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kerrsplit/beam_splitter.hpp"
#include "kerrsplit/entanglement.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kerrsplit;

TEST_CASE("single photon splits into (|1,0> + i|0,1>)/sqrt2") {
  const auto phi = split_with_vacuum(FockVector::basis(1, 3));
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(phi(1, 0) - Complex(h, 0.0)) < 1e-15);
  CHECK(std::abs(phi(0, 1) - Complex(0.0, h)) < 1e-15);
  CHECK(phi.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(entanglement_entropy(phi) == doctest::Approx(1.0).epsilon(1e-12));

  const auto plain = split_with_vacuum(FockVector::basis(1, 3), ReflectionPhase::Omitted);
  CHECK(std::abs(plain(0, 1) - Complex(h, 0.0)) < 1e-15);
}

TEST_CASE("Fock |5> gives the binomial row") {
  const auto phi = split_with_vacuum(FockVector::basis(5, 8));
  const double binom[] = {1, 5, 10, 10, 5, 1};
  double oracle = 0.0;
  for (int p = 0; p <= 5; ++p) {
    CHECK(std::norm(phi(p, 5 - p)) == doctest::Approx(binom[p] / 32.0).epsilon(1e-13));
    const double w = binom[p] / 32.0;
    oracle -= w * std::log2(w);
  }
  CHECK(entanglement_entropy(phi) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(testing::binomial_split_entropy(5) == doctest::Approx(oracle).epsilon(1e-14));
  CHECK(oracle == doctest::Approx(2.198).epsilon(5e-4));
  // Amplitude off the n = 5 anti-diagonal vanishes.
  for (int p = 0; p <= 8; ++p)
    for (int k = 0; k <= 8; ++k)
      if (p + k != 5) CHECK(phi(p, k) == Complex(0.0));
}

TEST_CASE("coherent input leaves a product of coherent states") {
  const InitialStateSpec spec{5.0, std::numbers::pi / 4, 0};
  const int n_cut = choose_cutoff(5.0, 0);
  const auto phi = split_with_vacuum(build_initial(spec, n_cut));
  const Complex a = spec.alpha() / std::sqrt(2.0);
  const Complex b = Complex(0.0, 1.0) * a;
  const auto c = coherent_state({std::norm(a), std::arg(a), 0}, n_cut);
  const auto d = coherent_state({std::norm(b), std::arg(b), 0}, n_cut);
  const Eigen::MatrixXcd product = c.amplitudes() * d.amplitudes().transpose();
  // The split state lives on p + k <= n_cut, the product does not.
  CHECK((phi.matrix() - product).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(entanglement_entropy(phi) < 1e-10);
}

TEST_CASE("property: splitting is norm preserving and photon number conserving") {
  testing::Gen gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n_cut = gen.integer(0, 30);
    const auto psi = gen.fock_vector(n_cut);
    const auto phi = split_with_vacuum(psi);
    CHECK(phi.norm() == doctest::Approx(1.0).epsilon(1e-12));
    double mean_out = 0.0;
    for (int p = 0; p <= n_cut; ++p)
      for (int k = 0; k <= n_cut; ++k) mean_out += (p + k) * std::norm(phi(p, k));
    CHECK(mean_out == doctest::Approx(psi.mean_photon_number()).epsilon(1e-11));
  }
}

TEST_CASE("output_at_time composes evolution and splitting") {
  const InitialStateSpec spec{3.0, 0.3, 2};
  const int n_cut = choose_cutoff(3.0, 2);
  const auto direct = split_with_vacuum(kerr_evolve(build_initial(spec, n_cut), {0.21}));
  const auto composed = output_at_time(spec, {0.21}, n_cut);
  CHECK((direct.matrix() - composed.matrix()).norm() < 1e-15);
  CHECK_THROWS_AS(TwoModeAmplitudeMatrix(Eigen::MatrixXcd(2, 3)), std::invalid_argument);
}
