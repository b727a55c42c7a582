#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kerrsplit/husimi.hpp"
#include "kerrsplit/kerr.hpp"
#include "support.hpp"

using namespace kerrsplit;

namespace {

constexpr double kInvPi = 1.0 / std::numbers::pi;

PhaseSpaceGrid evolved_grid(double nu, int m, double tau) {
  const InitialStateSpec spec{nu, std::numbers::pi / 4, m};
  const auto psi = kerr_evolve(build_initial(spec, choose_cutoff(nu, m)), {tau});
  return husimi_q(psi, default_window(nu, m));
}

PhaseSpaceGrid synthetic(int resolution, auto&& f) {
  const auto window = GridWindow::centered(5.0, resolution);
  std::vector<double> values;
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) values.push_back(f(window.x(i), window.p(j)));
  return PhaseSpaceGrid(window, values);
}

}  // namespace

TEST_CASE("vacuum Q at the origin is 1/pi") {
  CHECK(husimi_at(FockVector::basis(0, 3), 0.0, 0.0) == doctest::Approx(kInvPi).epsilon(1e-15));
  CHECK(husimi_at(FockVector::basis(1, 3), 0.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("coherent-state Q is a Gaussian centred on alpha") {
  const InitialStateSpec spec{5.0, std::numbers::pi / 4, 0};
  const auto psi = build_initial(spec, choose_cutoff(5.0, 0));
  const Complex alpha = spec.alpha();
  const double x0 = std::sqrt(2.0) * alpha.real();
  const double p0 = std::sqrt(2.0) * alpha.imag();
  CHECK(husimi_at(psi, x0, p0) == doctest::Approx(kInvPi).epsilon(1e-11));

  testing::Gen gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = gen.uniform(-6.0, 6.0);
    const double p = gen.uniform(-6.0, 6.0);
    const Complex beta(x / std::sqrt(2.0), p / std::sqrt(2.0));
    CHECK(husimi_at(psi, x, p) == doctest::Approx(kInvPi * std::exp(-std::norm(beta - alpha))).epsilon(1e-10));
  }

  const auto grid = husimi_q(psi, default_window(5.0, 0));
  CHECK(grid.integral() == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(count_peaks(grid) == 1);
}

TEST_CASE("property: 0 <= Q <= 1/pi") {
  testing::Gen gen(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto psi = gen.fock_vector(gen.integer(0, 25));
    for (int k = 0; k < 20; ++k) {
      const double q = husimi_at(psi, gen.uniform(-8.0, 8.0), gen.uniform(-8.0, 8.0));
      CHECK(q >= 0.0);
      CHECK(q <= kInvPi + 1e-15);
    }
  }
}

TEST_CASE("property: phase rotation rotates Q") {
  testing::Gen gen(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = gen.fock_vector(gen.integer(1, 20));
    const double phi = gen.uniform(-3.0, 3.0);
    Eigen::VectorXcd rotated = psi.amplitudes();
    for (int n = 0; n < rotated.size(); ++n) rotated[n] *= std::polar(1.0, -phi * n);
    const FockVector turned(rotated);
    const double x = gen.uniform(-4.0, 4.0);
    const double p = gen.uniform(-4.0, 4.0);
    // Q_rotated(beta e^{-i phi}) = Q(beta)
    const Complex b = Complex(x, p) * std::polar(1.0, -phi);
    CHECK(husimi_at(turned, b.real(), b.imag()) == doctest::Approx(husimi_at(psi, x, p)).epsilon(1e-10));
  }
}

TEST_CASE("grid evaluation is independent of thread count") {
  const InitialStateSpec spec{5.0, std::numbers::pi / 4, 2};
  const auto psi = kerr_evolve(build_initial(spec, choose_cutoff(5.0, 2)), {0.3});
  const auto window = default_window(5.0, 2);
  CHECK(husimi_q(psi, window, 1).values() == husimi_q(psi, window, 4).values());
}

TEST_CASE("N_max estimate") {
  CHECK(n_max_estimate(std::sqrt(5.0)) == doctest::Approx(4.62).epsilon(0.01 / 4.62));
  CHECK(n_max_estimate(std::sqrt(20.0)) == doctest::Approx(9.26).epsilon(0.01 / 9.26));
  CHECK(n_max_estimate(0.0) == 0.0);
  CHECK_THROWS_AS(n_max_estimate(-1.0), std::invalid_argument);
}

TEST_CASE("peak counting on synthetic grids") {
  auto bump = [](double x, double p, double x0, double p0, double h) {
    return h * std::exp(-((x - x0) * (x - x0) + (p - p0) * (p - p0)));
  };
  SUBCASE("two separated bumps") {
    const auto g = synthetic(101, [&](double x, double p) { return bump(x, p, -2.5, 0, 1) + bump(x, p, 2.5, 0, 0.8); });
    CHECK(count_peaks(g) == 2);
    CHECK(count_superlevel_components(g, 0.1) == 2);
    const auto peaks = find_peaks(g);
    REQUIRE(peaks.size() >= 2);
    CHECK(peaks[0].height == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(peaks[0].prominence == doctest::Approx(peaks[0].height));
  }
  SUBCASE("a bump below the height floor is ignored") {
    const auto g = synthetic(101, [&](double x, double p) { return bump(x, p, -2.5, 0, 1) + bump(x, p, 2.5, 0, 0.05); });
    CHECK(count_peaks(g, 0.1) == 1);
  }
  SUBCASE("a shoulder with small prominence is merged") {
    const auto g = synthetic(101, [&](double x, double p) { return bump(x, p, -0.6, 0, 1) + bump(x, p, 0.6, 0, 0.9); });
    CHECK(count_peaks(g) == 1);
  }
  SUBCASE("flat zero grid") {
    const auto g = synthetic(11, [](double, double) { return 0.0; });
    CHECK(count_peaks(g) == 0);
  }
  CHECK_THROWS_AS(count_peaks(synthetic(11, [](double, double) { return 1.0; }), 1.5), std::invalid_argument);
}

TEST_CASE("sub-packet counts at fractional revivals") {
  CHECK(count_peaks(evolved_grid(5.0, 0, 0.0)) == 1);
  CHECK(count_peaks(evolved_grid(5.0, 0, 1.0 / 2.0)) == 2);
  CHECK(count_peaks(evolved_grid(5.0, 0, 1.0 / 3.0)) == 3);
  CHECK(count_peaks(evolved_grid(5.0, 0, 1.0 / 4.0)) == 4);
  CHECK(count_peaks(evolved_grid(5.0, 0, 1.0 / 5.0)) == 5);
  // Six packets do not fit on a ring that holds about 4.6.
  CHECK(count_peaks(evolved_grid(5.0, 0, 1.0 / 6.0)) < 6);
  CHECK(count_peaks(evolved_grid(5.0, 5, 1.0 / 8.0)) < 8);
  CHECK(count_peaks(evolved_grid(5.0, 10, 1.0 / 8.0)) == 8);
}

TEST_CASE("grid geometry") {
  const auto w = GridWindow::centered(3.0, 7);
  CHECK(w.x(0) == -3.0);
  CHECK(w.x(6) == doctest::Approx(3.0));
  CHECK(w.dx() == doctest::Approx(1.0));
  CHECK_THROWS_AS(GridWindow::centered(3.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(PhaseSpaceGrid(w, std::vector<double>(10)), std::invalid_argument);
}
