#pragma once

#include <utility>
#include <vector>

#include "kerrsplit/fock.hpp"

namespace kerrsplit {

/// Dimensionless Kerr time tau = t / T_rev = chi t / pi. tau = 1 is a full revival.
struct KerrTime {
  double tau = 0.0;
};

/// Fractional revival instant tau = p/q with p, q coprime and 1 <= p < q.
class FractionalRevivalSpec {
 public:
  FractionalRevivalSpec(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  bool q_even() const noexcept { return q_ % 2 == 0; }
  KerrTime time() const noexcept { return {double(p_) / double(q_)}; }

 private:
  int p_;
  int q_;
};

struct CoherentComponent {
  Complex coefficient;
  Complex center;
};

/// sum_j coefficient_j |center_j>; all centers share |alpha|.
struct CoherentSuperposition {
  std::vector<CoherentComponent> components;
  bool q_even = false;
};

/// exp(-i pi tau n(n-1)), reduced modulo 2 pi with integer arithmetic on n(n-1)/2.
Complex kerr_phase(int n, KerrTime time);

FockVector kerr_evolve(const FockVector& state, KerrTime time);

/// Coherent-state expansion of the Kerr-evolved |alpha> at tau = p/q. The
/// coefficients invert the q-point Fourier relation between the Kerr phase
/// (periodic in n for odd q, antiperiodic for even q) and the rotated centers.
CoherentSuperposition fractional_revival_superposition(Complex alpha,
                                                       const FractionalRevivalSpec& spec);

/// Fock vector of the superposition on levels 0..n_cut, renormalized.
FockVector reconstruct_fock(const CoherentSuperposition& superposition, int n_cut,
                            const CutoffPolicy& policy = {});

/// |<a|b>|
double fidelity(const FockVector& a, const FockVector& b);

struct OracleCheck {
  int p = 0;
  int q = 0;
  double fidelity = 0.0;
  bool passed = false;
};

/// Compares reconstruct_fock against kerr_evolve of |alpha> at each (p, q).
std::vector<OracleCheck> run_oracle_suite(const InitialStateSpec& coherent,
                                          const std::vector<std::pair<int, int>>& fractions,
                                          double tolerance = 1e-10,
                                          const CutoffPolicy& policy = {});

}  // namespace kerrsplit
