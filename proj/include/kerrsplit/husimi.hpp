#pragma once

#include <vector>

#include "kerrsplit/fock.hpp"

namespace kerrsplit {

/// Rectangular (x, p) window, `resolution` samples per axis including both ends.
/// Coherent probe beta = (x + i p) / sqrt 2, so the vacuum has unit variance.
struct GridWindow {
  double x_min = -1.0;
  double x_max = 1.0;
  double p_min = -1.0;
  double p_max = 1.0;
  int resolution = 201;

  static GridWindow centered(double half_width, int resolution);

  double dx() const { return (x_max - x_min) / (resolution - 1); }
  double dp() const { return (p_max - p_min) / (resolution - 1); }
  double x(int i) const { return x_min + i * dx(); }
  double p(int j) const { return p_min + j * dp(); }
  void validate() const;
};

/// Square window of half-width 2 + 1.6 sqrt(2 (nu + m)) at 201 points per axis.
GridWindow default_window(double nu, int m);

class PhaseSpaceGrid {
 public:
  PhaseSpaceGrid(GridWindow window, std::vector<double> values);

  const GridWindow& window() const noexcept { return window_; }
  int resolution() const noexcept { return window_.resolution; }
  /// Q at (x(i), p(j)); storage is x-major.
  double at(int i, int j) const { return values_[i * window_.resolution + j]; }
  const std::vector<double>& values() const noexcept { return values_; }

  double max() const;
  /// sum Q d^2beta with d^2beta = dx dp / 2; ~1 when the window holds the state.
  double integral() const;

 private:
  GridWindow window_;
  std::vector<double> values_;
};

/// (1/pi) |<beta|psi>|^2 with beta = (x + i p)/sqrt 2.
double husimi_at(const FockVector& state, double x, double p);

PhaseSpaceGrid husimi_q(const FockVector& state, const GridWindow& window, unsigned threads = 1);

/// Estimated number of distinguishable sub-packets on a circle of radius |alpha|.
double n_max_estimate(double alpha_mag);

struct Peak {
  int i = 0;
  int j = 0;
  double height = 0.0;
  /// Drop below `height` needed to reach a higher peak; the global maximum
  /// carries its own height.
  double prominence = 0.0;
};

/// Local maxima with their superlevel-set persistence (8-connectivity),
/// sorted by descending prominence.
std::vector<Peak> find_peaks(const PhaseSpaceGrid& grid);

/// Peaks at least rel_threshold * max Q high whose prominence is at least
/// min_rel_prominence of their own height. Zero for an all-zero grid.
int count_peaks(const PhaseSpaceGrid& grid, double rel_threshold = 0.1,
                double min_rel_prominence = 0.2);

/// Connected components (8-connectivity) of {Q >= rel_level * max Q}.
int count_superlevel_components(const PhaseSpaceGrid& grid, double rel_level);

}  // namespace kerrsplit
