#include "kerrsplit/runners.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "kerrsplit/beam_splitter.hpp"
#include "kerrsplit/decoherence.hpp"
#include "kerrsplit/entanglement.hpp"
#include "kerrsplit/error.hpp"
#include "kerrsplit/parallel.hpp"

namespace kerrsplit {
namespace {

RecordMeta meta_for(const InitialStateSpec& spec, int n_cut) {
  return {spec.nu, spec.m, spec.theta, n_cut};
}

// Initial state is built once; each tau applies the diagonal Kerr phase.
std::vector<double> entropies_over(const FockVector& initial, std::span<const double> taus,
                                   unsigned threads) {
  std::vector<double> out(taus.size());
  parallel_for(taus.size(), threads, [&](std::size_t i) {
    out[i] = entanglement_entropy(split_with_vacuum(kerr_evolve(initial, {taus[i]})));
  });
  return out;
}

int checked_cutoff(double nu, int m, const CutoffPolicy& policy, std::size_t cap) {
  const int n_cut = choose_cutoff(nu, m, policy);
  try {
    check_dimension_cap(n_cut + 1, cap);
  } catch (const DimensionCapExceeded& e) {
    throw ScenarioInfeasible(nu, m, e.what());
  }
  return n_cut;
}

}  // namespace

Fraction nearest_fraction(double x, int q_max) {
  if (q_max < 1) throw std::invalid_argument("nearest_fraction: q_max must be >= 1");
  if (!std::isfinite(x)) throw std::invalid_argument("nearest_fraction: x must be finite");
  // Convergents h/k of the continued fraction of x.
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  double rest = x - std::floor(x);
  Fraction best{static_cast<int>(h), 1};
  double best_err = std::abs(x - double(h));
  auto consider = [&](long long num, long long den) {
    if (den < 1 || den > q_max) return;
    const double err = std::abs(x - double(num) / double(den));
    if (err < best_err - 1e-15 || (std::abs(err - best_err) <= 1e-15 && den < best.q)) {
      best = {static_cast<int>(num), static_cast<int>(den)};
      best_err = err;
    }
  };
  while (rest > 1e-12) {
    const double inv = 1.0 / rest;
    const long long a = static_cast<long long>(std::floor(inv));
    rest = inv - double(a);
    // Semiconvergents (h_prev + j h)/(k_prev + j k) for j = 1..a, the last being
    // the next convergent.
    bool capped = false;
    for (long long j = 1; j <= a; ++j) {
      const long long den = k_prev + j * k;
      if (den > q_max) {
        capped = true;
        break;
      }
      consider(h_prev + j * h, den);
    }
    if (capped) break;
    const long long h_next = h_prev + a * h;
    const long long k_next = k_prev + a * k;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return best;
}

std::vector<LocalMinimum> find_local_minima(std::span<const double> taus,
                                            std::span<const double> values,
                                            double min_prominence, int q_max) {
  if (taus.size() != values.size())
    throw std::invalid_argument("find_local_minima: taus and values differ in length");
  std::vector<LocalMinimum> minima;
  const std::size_t n = values.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(values[i] < values[i - 1] && values[i] <= values[i + 1])) continue;
    // Highest point reached on each side before the curve drops below values[i].
    double left = values[i];
    for (std::size_t j = i; j-- > 0 && values[j] >= values[i];) left = std::max(left, values[j]);
    double right = values[i];
    for (std::size_t j = i + 1; j < n && values[j] >= values[i]; ++j) right = std::max(right, values[j]);
    const double prominence = std::min(left, right) - values[i];
    if (prominence < min_prominence) continue;
    minima.push_back({i, taus[i], values[i], prominence, nearest_fraction(taus[i], q_max)});
  }
  return minima;
}

EntropyCurveResult run_entropy_curve(const ScenarioConfig& config) {
  config.validate();
  const InitialStateSpec& spec = config.initial;
  EntropyCurveResult result;
  result.n_cut = choose_cutoff(spec.nu, spec.m, config.cutoff);
  const FockVector initial = build_initial(spec, result.n_cut, config.cutoff);
  const std::vector<double> taus = config.time_grid.points();
  const std::vector<double> entropy = entropies_over(initial, taus, config.threads);

  result.minima = find_local_minima(taus, entropy, config.analysis.min_prominence, config.analysis.q_max);
  result.records.reserve(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i)
    result.records.push_back({"tau", taus[i], "entropy_ebits", entropy[i], meta_for(spec, result.n_cut), {}, {}});
  for (const auto& minimum : result.minima)
    result.records[minimum.index].note =
        fmt::format("revival {}/{}", minimum.fraction.p, minimum.fraction.q);
  return result;
}

std::vector<CurveRecord> run_entropy_surface(const ScenarioConfig& config) {
  config.validate();
  if (!config.nu_grid) throw ConfigError("nu_grid", "required by entropy-surface");
  const std::vector<double> taus = config.time_grid.points();
  const std::vector<double> nus = config.nu_grid->points();

  // column[k] holds E(tau) for nus[k]
  std::vector<std::vector<double>> column(nus.size());
  std::vector<int> cutoffs(nus.size());
  for (std::size_t k = 0; k < nus.size(); ++k) {
    InitialStateSpec spec = config.initial;
    spec.nu = nus[k];
    cutoffs[k] = choose_cutoff(spec.nu, spec.m, config.cutoff);
    column[k] = entropies_over(build_initial(spec, cutoffs[k], config.cutoff), taus, config.threads);
  }

  std::vector<CurveRecord> records;
  records.reserve(taus.size() * nus.size());
  for (std::size_t i = 0; i < taus.size(); ++i)
    for (std::size_t k = 0; k < nus.size(); ++k) {
      InitialStateSpec spec = config.initial;
      spec.nu = nus[k];
      records.push_back({"tau", taus[i], "entropy_ebits", column[k][i], meta_for(spec, cutoffs[k]), {}, {}});
    }
  return records;
}

std::vector<CurveRecord> run_decoherence_scan(const ScenarioConfig& config, Artifact artifact) {
  config.validate();
  if (!config.channel) throw ConfigError("channel", "required by decoherence scans");
  const ChannelConfig& channel = *config.channel;
  const bool over_nu = artifact == Artifact::NegativityVsNu;
  if (!over_nu && artifact != Artifact::NegativityVsGammaTau)
    throw std::invalid_argument("run_decoherence_scan: not a decoherence artifact");
  if (over_nu && !config.nu_grid) throw ConfigError("nu_grid", "required by negativity-vs-nu");

  const std::vector<double> nus = over_nu ? config.nu_grid->points() : std::vector<double>{config.initial.nu};
  // Refuse the whole scan before any heavy work if a point cannot fit.
  for (int m : channel.m_values)
    for (double nu : nus) checked_cutoff(nu, m, config.cutoff, channel.dimension_cap);

  DecayCurveOptions options;
  options.channel.gamma1 = channel.gamma1;
  options.channel.gamma2 = channel.gamma2;
  options.damping.dimension_cap = channel.dimension_cap;
  options.threads = config.threads;

  std::vector<CurveRecord> records;
  for (double tau : channel.taus)
    for (int m : channel.m_values) {
      if (!over_nu) {
        InitialStateSpec spec = config.initial;
        spec.m = m;
        const int n_cut = choose_cutoff(spec.nu, m, config.cutoff);
        const auto phi = output_at_time(spec, {tau}, n_cut, config.cutoff);
        const std::vector<double> grid = channel.gamma_tau_grid.points();
        for (const DecayPoint& point : negativity_decay_curve(phi, grid, options))
          records.push_back({"gamma_tau", point.gamma_tau, "log_negativity", point.log_negativity,
                             meta_for(spec, n_cut), tau, {}});
        continue;
      }
      std::vector<CurveRecord> block(nus.size());
      // One full damp + eigensolve per nu; each worker owns its matrices.
      parallel_for(nus.size(), config.threads, [&](std::size_t k) {
        InitialStateSpec spec = config.initial;
        spec.m = m;
        spec.nu = nus[k];
        const int n_cut = choose_cutoff(spec.nu, m, config.cutoff);
        const auto phi = output_at_time(spec, {tau}, n_cut, config.cutoff);
        ChannelParams params = options.channel;
        params.gamma_tau = channel.fixed_gamma_tau;
        const double en = log_negativity(damp(pure_to_density(phi), params, options.damping));
        block[k] = {"nu", spec.nu, "log_negativity", en, meta_for(spec, n_cut), tau, {}};
      });
      records.insert(records.end(), block.begin(), block.end());
    }
  return records;
}

std::vector<HusimiSnapshot> run_husimi(const ScenarioConfig& config) {
  config.validate();
  const InitialStateSpec& spec = config.initial;
  const int n_cut = choose_cutoff(spec.nu, spec.m, config.cutoff);
  const FockVector initial = build_initial(spec, n_cut, config.cutoff);
  GridWindow window = default_window(spec.nu, spec.m);
  window.resolution = config.husimi.resolution;
  if (config.husimi.half_width) window = GridWindow::centered(*config.husimi.half_width, config.husimi.resolution);

  std::vector<HusimiSnapshot> snapshots;
  for (double tau : config.husimi.taus) {
    const FockVector state = kerr_evolve(initial, {tau});
    PhaseSpaceGrid grid = husimi_q(state, window, config.threads);
    const int peaks = count_peaks(grid, config.husimi.rel_threshold, config.husimi.min_rel_prominence);
    const int components = count_superlevel_components(grid, config.husimi.rel_threshold);
    const double entropy = entanglement_entropy(split_with_vacuum(state));
    snapshots.push_back({tau, n_cut, std::move(grid), peaks, components, entropy});
  }
  return snapshots;
}

}  // namespace kerrsplit
