#include "kerrsplit/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kerrsplit/error.hpp"

namespace kerrsplit {
namespace {

constexpr int kFactorialTableSize = 4096;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kFactorialTableSize);
    t[0] = 0.0;
    for (int k = 1; k < kFactorialTableSize; ++k) t[k] = t[k - 1] + std::log(double(k));
    return t;
  }();
  return table;
}

// Exact photon-number distribution P(k) of N a^{dag m}|alpha>, k = 0..size-1.
// Weights nu^n (n+m)!/(n!)^2 at k = n+m; the series is extended until terms
// underflow relative to the largest one.
std::vector<double> level_distribution(double nu, int m) {
  std::vector<double> p(static_cast<std::size_t>(m), 0.0);
  if (nu == 0.0) {
    p.push_back(1.0);
    return p;
  }
  const double log_nu = std::log(nu);
  std::vector<double> logw;
  double log_max = -INFINITY;
  for (int n = 0;; ++n) {
    const double lw = n * log_nu + log_factorial(n + m) - 2.0 * log_factorial(n);
    logw.push_back(lw);
    log_max = std::max(log_max, lw);
    if (n > nu + m + 10 && lw < log_max - 745.0) break;
    if (n + m + 2 >= kFactorialTableSize) break;
  }
  double total = 0.0;
  std::vector<double> w(logw.size());
  for (std::size_t i = logw.size(); i-- > 0;) {
    w[i] = std::exp(logw[i] - log_max);
    total += w[i];
  }
  for (double wi : w) p.push_back(wi / total);
  return p;
}

double tail_above(const std::vector<double>& p, int level) {
  double tail = 0.0;
  for (int k = static_cast<int>(p.size()) - 1; k > level; --k) tail += p[k];
  return tail;
}

void check_cutoff(double nu, int m, int n_cut, const CutoffPolicy& policy) {
  const double tail = tail_mass_above(nu, m, n_cut);
  if (tail > policy.tail_tol) throw CutoffTooSmall(n_cut, choose_cutoff(nu, m, policy), tail);
}

}  // namespace

void CutoffPolicy::validate() const {
  if (!(tail_tol > 0.0 && tail_tol < 1.0))
    throw std::invalid_argument("CutoffPolicy: tail_tol must lie in (0, 1)");
  if (safety_margin < 0) throw std::invalid_argument("CutoffPolicy: safety_margin must be >= 0");
}

Complex InitialStateSpec::alpha() const { return std::polar(std::sqrt(nu), theta); }

void InitialStateSpec::validate() const {
  if (!(nu >= 0.0) || !std::isfinite(nu))
    throw std::invalid_argument("InitialStateSpec: nu must be finite and >= 0");
  if (!std::isfinite(theta)) throw std::invalid_argument("InitialStateSpec: theta must be finite");
  if (m < 0) throw std::invalid_argument("InitialStateSpec: m must be >= 0");
}

FockVector::FockVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw std::invalid_argument("FockVector: need at least one level");
}

FockVector FockVector::basis(int n, int n_cut) {
  if (n < 0 || n > n_cut) throw std::invalid_argument("FockVector::basis: level out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n_cut + 1);
  v[n] = 1.0;
  return FockVector(std::move(v));
}

double FockVector::mean_photon_number() const {
  double mean = 0.0;
  for (int n = 0; n < dimension(); ++n) mean += n * std::norm(amplitudes_[n]);
  return mean;
}

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  if (n < kFactorialTableSize) return log_factorial_table()[n];
  // Stirling series; only reached far outside any physical cutoff.
  const double x = n + 1.0;
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + 1.0 / (12.0 * x);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k out of range");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double tail_mass_above(double nu, int m, int level) {
  if (nu < 0.0 || m < 0) throw std::invalid_argument("tail_mass_above: nu and m must be >= 0");
  return tail_above(level_distribution(nu, m), level);
}

int choose_cutoff(double nu, int m, const CutoffPolicy& policy) {
  if (nu < 0.0 || m < 0) throw std::invalid_argument("choose_cutoff: nu and m must be >= 0");
  policy.validate();
  const std::vector<double> p = level_distribution(nu, m);
  double tail = 0.0;
  int n = static_cast<int>(p.size()) - 1;
  // Walk down from the top while the mass above n - 1 stays below tolerance.
  while (n > m && tail + p[n] < policy.tail_tol) {
    tail += p[n];
    --n;
  }
  return n + policy.safety_margin;
}

FockVector coherent_state(const InitialStateSpec& spec, int n_cut, const CutoffPolicy& policy) {
  spec.validate();
  if (n_cut < 0) throw std::invalid_argument("coherent_state: n_cut must be >= 0");
  check_cutoff(spec.nu, 0, n_cut, policy);

  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_cut + 1);
  if (spec.nu == 0.0) {
    c[0] = 1.0;
  } else {
    const double half_log_nu = 0.5 * std::log(spec.nu);
    for (int n = 0; n <= n_cut; ++n) {
      const double log_mag = -0.5 * spec.nu + n * half_log_nu - 0.5 * log_factorial(n);
      c[n] = std::polar(std::exp(log_mag), n * spec.theta);
    }
  }
  c.normalize();
  return FockVector(std::move(c));
}

FockVector photon_added_coherent_state(const InitialStateSpec& spec, int n_cut,
                                       const CutoffPolicy& policy) {
  spec.validate();
  if (n_cut < spec.m) throw CutoffTooSmall(n_cut, choose_cutoff(spec.nu, spec.m, policy), 1.0);
  check_cutoff(spec.nu, spec.m, n_cut, policy);

  const int m = spec.m;
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_cut + 1);
  if (spec.nu == 0.0) {
    c[m] = 1.0;
    return FockVector(std::move(c));
  }
  const double half_log_nu = 0.5 * std::log(spec.nu);
  std::vector<double> log_mag(n_cut - m + 1);
  for (int n = 0; n + m <= n_cut; ++n)
    log_mag[n] = n * half_log_nu + 0.5 * log_factorial(n + m) - log_factorial(n);
  const double top = *std::max_element(log_mag.begin(), log_mag.end());
  for (int n = 0; n + m <= n_cut; ++n)
    c[n + m] = std::polar(std::exp(log_mag[n] - top), n * spec.theta);
  c.normalize();
  return FockVector(std::move(c));
}

FockVector build_initial(const InitialStateSpec& spec, int n_cut, const CutoffPolicy& policy) {
  return spec.m == 0 ? coherent_state(spec, n_cut, policy)
                     : photon_added_coherent_state(spec, n_cut, policy);
}

Complex inner_product(const FockVector& a, const FockVector& b) {
  const Eigen::Index shared = std::min(a.amplitudes().size(), b.amplitudes().size());
  return a.amplitudes().head(shared).dot(b.amplitudes().head(shared));
}

}  // namespace kerrsplit
