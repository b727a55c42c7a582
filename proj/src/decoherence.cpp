#include "kerrsplit/decoherence.hpp"

#include <cmath>
#include <stdexcept>

#include "kerrsplit/error.hpp"
#include "kerrsplit/parallel.hpp"

namespace kerrsplit {
namespace {

// weight[(m * d + n) * d + p] = R for one mode with decay exponent k.
class TransferWeights {
 public:
  TransferWeights(int levels, double exponent) : d_(levels), w_(std::size_t(levels) * levels * levels, 0.0) {
    const double decay = std::exp(-exponent);
    const double loss = -std::expm1(-2.0 * exponent);
    for (int m = 0; m < d_; ++m)
      for (int n = 0; n < d_; ++n)
        for (int p = 0; p + std::max(m, n) < d_; ++p) {
          const double binom = std::exp(0.5 * (log_binomial(m + p, p) + log_binomial(n + p, p)));
          w_[(std::size_t(m) * d_ + n) * d_ + p] = binom * std::pow(loss, p) * std::pow(decay, m + n);
        }
  }

  double operator()(int m, int n, int p) const { return w_[(std::size_t(m) * d_ + n) * d_ + p]; }

 private:
  int d_;
  std::vector<double> w_;
};

Eigen::MatrixXcd damp_mode_c(const Eigen::MatrixXcd& rho, int d, const TransferWeights& w) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int p = 0; p + std::max(m, n) < d; ++p) {
        const double weight = w(m, n, p);
        if (weight == 0.0) continue;
        out.block(m * d, n * d, d, d) += weight * rho.block((m + p) * d, (n + p) * d, d, d);
      }
  return out;
}

Eigen::MatrixXcd damp_mode_d(const Eigen::MatrixXcd& rho, int d, const TransferWeights& w) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const auto in = rho.block(a * d, b * d, d, d);
      auto dst = out.block(a * d, b * d, d, d);
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          Complex sum = 0.0;
          for (int p = 0; p + std::max(m, n) < d; ++p) sum += w(m, n, p) * in(m + p, n + p);
          dst(m, n) = sum;
        }
    }
  return out;
}

TwoModeDensityMatrix damp_direct(const TwoModeDensityMatrix& rho, const TransferWeights& wc,
                                 const TransferWeights& wd) {
  const int d = rho.levels();
  TwoModeDensityMatrix out(d, Eigen::MatrixXcd::Zero(rho.dimension(), rho.dimension()));
  for (int m1 = 0; m1 < d; ++m1)
    for (int m2 = 0; m2 < d; ++m2)
      for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) {
          Complex sum = 0.0;
          for (int p1 = 0; p1 + std::max(m1, n1) < d; ++p1)
            for (int p2 = 0; p2 + std::max(m2, n2) < d; ++p2)
              sum += wc(m1, n1, p1) * wd(m2, n2, p2) * rho(m1 + p1, m2 + p2, n1 + p1, n2 + p2);
          out(m1, m2, n1, n2) = sum;
        }
  return out;
}

}  // namespace

void ChannelParams::validate() const {
  if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0) || !std::isfinite(gamma1) || !std::isfinite(gamma2))
    throw std::invalid_argument("ChannelParams: gamma1 and gamma2 must be finite and >= 0");
  if (!(gamma_tau >= 0.0)) throw std::invalid_argument("ChannelParams: gamma_tau must be >= 0");
}

std::pair<double, double> ChannelParams::mode_exponents() const {
  const double mean_rate = 0.5 * (gamma1 + gamma2);
  if (mean_rate == 0.0) return {0.0, 0.0};
  const double tau = gamma_tau / mean_rate;
  return {gamma1 == 0.0 ? 0.0 : gamma1 * tau, gamma2 == 0.0 ? 0.0 : gamma2 * tau};
}

void check_dimension_cap(int levels, std::size_t cap) {
  const std::size_t product = std::size_t(levels) * std::size_t(levels);
  if (product > cap) throw DimensionCapExceeded(product, cap);
}

TwoModeDensityMatrix damp(const TwoModeDensityMatrix& rho0, const ChannelParams& params,
                          const DampOptions& options) {
  params.validate();
  const int d = rho0.levels();
  check_dimension_cap(d, options.dimension_cap);
  const auto [kc, kd] = params.mode_exponents();
  const TransferWeights wc(d, kc);
  const TransferWeights wd(d, kd);
  if (options.method == DampingMethod::Direct) return damp_direct(rho0, wc, wd);
  return TwoModeDensityMatrix(d, damp_mode_d(damp_mode_c(rho0.matrix(), d, wc), d, wd));
}

std::vector<DecayPoint> negativity_decay_curve(const TwoModeAmplitudeMatrix& phi,
                                               std::span<const double> gamma_taus,
                                               const DecayCurveOptions& options) {
  check_dimension_cap(phi.levels(), options.damping.dimension_cap);
  const TwoModeDensityMatrix rho0 = pure_to_density(phi);
  std::vector<DecayPoint> curve(gamma_taus.size());
  parallel_for(gamma_taus.size(), options.threads, [&](std::size_t i) {
    ChannelParams params = options.channel;
    params.gamma_tau = gamma_taus[i];
    curve[i] = {gamma_taus[i], log_negativity(damp(rho0, params, options.damping), options.negativity)};
  });
  return curve;
}

}  // namespace kerrsplit
