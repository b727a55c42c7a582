#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "kerrsplit/kerr.hpp"
#include "support.hpp"

using namespace kerrsplit;

TEST_CASE("Kerr phase") {
  SUBCASE("matches exp(-i pi tau n(n-1)) for small n") {
    for (int n = 0; n < 30; ++n)
      for (double tau : {0.0, 0.1, 1.0 / 3.0, 0.5, 0.77}) {
        const Complex expected = std::polar(1.0, -std::numbers::pi * tau * n * (n - 1));
        CHECK(std::abs(kerr_phase(n, {tau}) - expected) < 1e-12);
      }
  }
  SUBCASE("tau = 1 is the identity at every level") {
    for (int n = 0; n < 2000; n += 7) CHECK(std::abs(kerr_phase(n, {1.0}) - Complex(1.0)) < 1e-12);
  }
  SUBCASE("tau = 1/2 gives (-1)^{n(n-1)/2}") {
    for (int n = 0; n < 40; ++n) {
      const double sign = ((n * (n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
      CHECK(std::abs(kerr_phase(n, {0.5}) - Complex(sign)) < 1e-12);
    }
  }
}

TEST_CASE("Kerr evolution") {
  const InitialStateSpec spec{5.0, std::numbers::pi / 4, 0};
  const auto psi = build_initial(spec, choose_cutoff(5.0, 0));

  SUBCASE("full revival returns the initial state") {
    CHECK(fidelity(kerr_evolve(psi, {1.0}), psi) == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("populations are untouched") {
    const auto evolved = kerr_evolve(psi, {0.37});
    for (int n = 0; n <= psi.n_cut(); ++n)
      CHECK(std::norm(evolved[n]) == doctest::Approx(std::norm(psi[n])).epsilon(1e-14));
  }
  SUBCASE("property: periodic with period 1 and composes additively") {
    testing::Gen gen(7);
    for (int trial = 0; trial < 30; ++trial) {
      const double t1 = gen.uniform(0.0, 1.0);
      const double t2 = gen.uniform(0.0, 1.0);
      const auto a = kerr_evolve(kerr_evolve(psi, {t1}), {t2});
      const auto b = kerr_evolve(psi, {t1 + t2});
      const auto c = kerr_evolve(psi, {t1 + t2 + 1.0});
      CHECK((a.amplitudes() - b.amplitudes()).norm() < 1e-12);
      CHECK((b.amplitudes() - c.amplitudes()).norm() < 1e-11);
    }
  }
}

TEST_CASE("fractional revival spec") {
  CHECK_THROWS_AS(FractionalRevivalSpec(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(FractionalRevivalSpec(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(FractionalRevivalSpec(3, 3), std::invalid_argument);
  CHECK(FractionalRevivalSpec(1, 4).q_even());
  CHECK_FALSE(FractionalRevivalSpec(2, 3).q_even());
  CHECK(FractionalRevivalSpec(2, 5).time().tau == doctest::Approx(0.4));
}

TEST_CASE("coherent-superposition oracle") {
  const std::complex<double> alpha = std::polar(std::sqrt(5.0), std::numbers::pi / 4);

  SUBCASE("tau = 1/2 is the two-component cat with centers alpha and -alpha") {
    const auto sup = fractional_revival_superposition(alpha, FractionalRevivalSpec(1, 2));
    REQUIRE(sup.components.size() == 2);
    for (const auto& c : sup.components) {
      CHECK(std::abs(c.coefficient) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
      CHECK(std::abs(c.center) == doctest::Approx(std::abs(alpha)).epsilon(1e-12));
    }
    CHECK(std::abs(sup.components[0].center + sup.components[1].center) < 1e-12);
  }
  SUBCASE("q components on a circle of radius |alpha|") {
    for (int q = 2; q <= 9; ++q) {
      const auto sup = fractional_revival_superposition(alpha, FractionalRevivalSpec(1, q));
      CHECK(sup.components.size() == std::size_t(q));
      CHECK(sup.q_even == (q % 2 == 0));
      double weight = 0.0;
      for (const auto& c : sup.components) {
        CHECK(std::abs(c.center) == doctest::Approx(std::abs(alpha)).epsilon(1e-12));
        weight += std::norm(c.coefficient);
      }
      // The coefficient vector is the image of a phase vector under a unitary DFT.
      CHECK(weight == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("fidelity with direct evolution") {
    const auto results = run_oracle_suite({5.0, std::numbers::pi / 4, 0}, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
    REQUIRE(results.size() == 4);
    for (const auto& r : results) {
      CAPTURE(r.p);
      CAPTURE(r.q);
      CHECK(r.passed);
      CHECK(r.fidelity >= 1.0 - 1e-10);
    }
  }
  SUBCASE("property: every coprime p/q up to q = 10 for random fields") {
    testing::Gen gen(99);
    for (int trial = 0; trial < 5; ++trial) {
      const InitialStateSpec spec{gen.uniform(0.5, 12.0), gen.uniform(-3.0, 3.0), 0};
      std::vector<std::pair<int, int>> fractions;
      for (int q = 2; q <= 10; ++q)
        for (int p = 1; p < q; ++p)
          if (std::gcd(p, q) == 1) fractions.emplace_back(p, q);
      for (const auto& r : run_oracle_suite(spec, fractions)) {
        CAPTURE(spec.nu);
        CAPTURE(r.p);
        CAPTURE(r.q);
        CHECK(r.fidelity >= 1.0 - 1e-10);
      }
    }
  }
}
