#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kerrsplit/husimi.hpp"
#include "kerrsplit/scenario.hpp"

namespace kerrsplit {

struct RecordMeta {
  double nu = 0.0;
  int m = 0;
  double theta = 0.0;
  int n_cut = 0;
};

/// One row of an emitted curve.
struct CurveRecord {
  std::string abscissa_label;
  double abscissa = 0.0;
  std::string ordinate_label;
  double ordinate = 0.0;
  RecordMeta meta;
  std::optional<double> revival_tau;  ///< Kerr time of the damped state, decoherence scans only
  std::string note;
};

struct Fraction {
  int p = 0;
  int q = 1;
};

/// Closest p/q to x with 1 <= q <= q_max, from continued-fraction convergents
/// and semiconvergents. Ties go to the smaller denominator.
Fraction nearest_fraction(double x, int q_max);

struct LocalMinimum {
  std::size_t index = 0;
  double tau = 0.0;
  double value = 0.0;
  double prominence = 0.0;
  Fraction fraction;
};

/// Three-point-stencil minima whose topographic prominence reaches min_prominence.
std::vector<LocalMinimum> find_local_minima(std::span<const double> taus,
                                            std::span<const double> values,
                                            double min_prominence, int q_max);

struct EntropyCurveResult {
  std::vector<CurveRecord> records;
  std::vector<LocalMinimum> minima;
  int n_cut = 0;
};

/// E(tau) over the time grid; local minima are annotated as p/q revival markers.
EntropyCurveResult run_entropy_curve(const ScenarioConfig& config);

/// E over the (tau, nu) product grid, tau-major.
std::vector<CurveRecord> run_entropy_surface(const ScenarioConfig& config);

/// E_N curves for every (revival tau, m) pair of the channel block; the
/// artifact picks the gamma_tau sweep or the nu sweep at fixed_gamma_tau.
std::vector<CurveRecord> run_decoherence_scan(const ScenarioConfig& config, Artifact artifact);

struct HusimiSnapshot {
  double tau = 0.0;
  int n_cut = 0;
  PhaseSpaceGrid grid;
  int peak_count = 0;
  int superlevel_components = 0;
  double entropy = 0.0;
};

/// One Q-function grid per configured tau.
std::vector<HusimiSnapshot> run_husimi(const ScenarioConfig& config);

}  // namespace kerrsplit
