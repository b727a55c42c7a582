#include "kerrsplit/kerr.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace kerrsplit {

FractionalRevivalSpec::FractionalRevivalSpec(int p, int q) : p_(p), q_(q) {
  if (q < 2 || p < 1 || p >= q)
    throw std::invalid_argument("FractionalRevivalSpec: need 1 <= p < q and q >= 2");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("FractionalRevivalSpec: p and q must be coprime");
}

Complex kerr_phase(int n, KerrTime time) {
  // pi tau n(n-1) = 2 pi tau k with integer k; only frac(tau k) matters.
  const auto k = static_cast<long long>(n) * (n - 1) / 2;
  const double turns = time.tau * static_cast<double>(k);
  const double frac = turns - std::floor(turns);
  return std::polar(1.0, -2.0 * std::numbers::pi * frac);
}

FockVector kerr_evolve(const FockVector& state, KerrTime time) {
  Eigen::VectorXcd out = state.amplitudes();
  for (int n = 2; n < state.dimension(); ++n) out[n] *= kerr_phase(n, time);
  return FockVector(std::move(out));
}

CoherentSuperposition fractional_revival_superposition(Complex alpha,
                                                       const FractionalRevivalSpec& spec) {
  const int q = spec.q();
  const double pi = std::numbers::pi;
  const double offset = spec.q_even() ? pi / q : 0.0;
  const KerrTime t = spec.time();

  CoherentSuperposition out;
  out.q_even = spec.q_even();
  out.components.reserve(q);
  for (int j = 0; j < q; ++j) {
    const double angle = offset - 2.0 * pi * j / q;
    // Inverse of the unitary q x q system  f(n) = sum_j c_j e^{i n angle_j}.
    Complex coeff = 0.0;
    for (int n = 0; n < q; ++n) coeff += kerr_phase(n, t) * std::polar(1.0, -n * angle);
    out.components.push_back({coeff / double(q), alpha * std::polar(1.0, angle)});
  }
  return out;
}

FockVector reconstruct_fock(const CoherentSuperposition& superposition, int n_cut,
                            const CutoffPolicy& policy) {
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(n_cut + 1);
  for (const auto& [coefficient, center] : superposition.components) {
    const InitialStateSpec spec{std::norm(center), std::arg(center), 0};
    sum += coefficient * coherent_state(spec, n_cut, policy).amplitudes();
  }
  sum.normalize();
  return FockVector(std::move(sum));
}

double fidelity(const FockVector& a, const FockVector& b) { return std::abs(inner_product(a, b)); }

std::vector<OracleCheck> run_oracle_suite(const InitialStateSpec& coherent,
                                          const std::vector<std::pair<int, int>>& fractions,
                                          double tolerance, const CutoffPolicy& policy) {
  const int n_cut = choose_cutoff(coherent.nu, 0, policy);
  const FockVector initial = coherent_state(coherent, n_cut, policy);
  std::vector<OracleCheck> checks;
  for (const auto& [p, q] : fractions) {
    const FractionalRevivalSpec spec(p, q);
    const FockVector direct = kerr_evolve(initial, spec.time());
    const FockVector oracle =
        reconstruct_fock(fractional_revival_superposition(coherent.alpha(), spec), n_cut, policy);
    const double f = fidelity(oracle, direct);
    checks.push_back({p, q, f, f >= 1.0 - tolerance});
  }
  return checks;
}

}  // namespace kerrsplit
