#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kerrsplit/entanglement.hpp"

namespace kerrsplit {

/// Zero-temperature photon loss on both output modes. Mode c couples with
/// gamma1 and mode d with gamma2. gamma_tau is the product of the mean rate
/// (gamma1 + gamma2)/2 and the interaction time, so equal rates give both
/// modes the decay exponent gamma_tau.
struct ChannelParams {
  double gamma1 = 0.1;
  double gamma2 = 0.1;
  double gamma_tau = 0.0;

  void validate() const;
  /// (gamma1 tau, gamma2 tau)
  std::pair<double, double> mode_exponents() const;
};

enum class DampingMethod {
  Factorized,  ///< one mode at a time, O(d^5)
  Direct,      ///< double p-sum for every element, O(d^6)
};

struct DampOptions {
  DampingMethod method = DampingMethod::Factorized;
  std::size_t dimension_cap = 4096;  ///< refuse levels^2 above this
};

/// Throws DimensionCapExceeded when levels^2 > cap.
void check_dimension_cap(int levels, std::size_t cap);

/// Closed-form Fock-basis solution of the loss master equation; the free
/// rotation term is left out since it only contributes local phases.
TwoModeDensityMatrix damp(const TwoModeDensityMatrix& rho0, const ChannelParams& params,
                          const DampOptions& options = {});

struct DecayPoint {
  double gamma_tau = 0.0;
  double log_negativity = 0.0;
};

struct DecayCurveOptions {
  ChannelParams channel;  ///< gamma_tau is overridden per sample
  DampOptions damping;
  NegativityOptions negativity;
  unsigned threads = 1;
};

/// E_N(damp(|phi><phi|)) at each gamma_tau, in input order.
std::vector<DecayPoint> negativity_decay_curve(const TwoModeAmplitudeMatrix& phi,
                                               std::span<const double> gamma_taus,
                                               const DecayCurveOptions& options = {});

}  // namespace kerrsplit
