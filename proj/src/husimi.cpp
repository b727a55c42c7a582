#include "kerrsplit/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "kerrsplit/parallel.hpp"

namespace kerrsplit {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void attach(std::size_t child_root, std::size_t root) { parent_[child_root] = root; }

 private:
  std::vector<std::size_t> parent_;
};

template <class Visit>
void for_each_neighbor(int i, int j, int n, Visit&& visit) {
  for (int di = -1; di <= 1; ++di)
    for (int dj = -1; dj <= 1; ++dj) {
      if (di == 0 && dj == 0) continue;
      const int ii = i + di;
      const int jj = j + dj;
      if (ii >= 0 && ii < n && jj >= 0 && jj < n) visit(ii, jj);
    }
}

}  // namespace

GridWindow GridWindow::centered(double half_width, int resolution) {
  GridWindow window{-half_width, half_width, -half_width, half_width, resolution};
  window.validate();
  return window;
}

void GridWindow::validate() const {
  if (resolution < 2) throw std::invalid_argument("GridWindow: resolution must be >= 2");
  if (!(x_max > x_min) || !(p_max > p_min))
    throw std::invalid_argument("GridWindow: empty window");
}

GridWindow default_window(double nu, int m) {
  return GridWindow::centered(2.0 + 1.6 * std::sqrt(2.0 * (nu + m)), 201);
}

PhaseSpaceGrid::PhaseSpaceGrid(GridWindow window, std::vector<double> values)
    : window_(window), values_(std::move(values)) {
  window_.validate();
  if (values_.size() != static_cast<std::size_t>(window_.resolution) * window_.resolution)
    throw std::invalid_argument("PhaseSpaceGrid: value count does not match resolution");
}

double PhaseSpaceGrid::max() const { return *std::max_element(values_.begin(), values_.end()); }

double PhaseSpaceGrid::integral() const {
  const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  return sum * window_.dx() * window_.dp() / 2.0;
}

double husimi_at(const FockVector& state, double x, double p) {
  const Complex beta_conj = Complex{x, -p} / std::numbers::sqrt2;
  // sum_n conj(beta)^n c_n / sqrt(n!) by forward recurrence on the monomial.
  Complex term = 1.0;
  Complex overlap = 0.0;
  for (int n = 0; n < state.dimension(); ++n) {
    overlap += term * state[n];
    term *= beta_conj / std::sqrt(double(n + 1));
  }
  return std::exp(-std::norm(beta_conj)) * std::norm(overlap) / std::numbers::pi;
}

PhaseSpaceGrid husimi_q(const FockVector& state, const GridWindow& window, unsigned threads) {
  window.validate();
  const int n = window.resolution;
  std::vector<double> values(static_cast<std::size_t>(n) * n);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    for (int j = 0; j < n; ++j)
      values[i * n + j] = husimi_at(state, window.x(static_cast<int>(i)), window.p(j));
  });
  return PhaseSpaceGrid(window, std::move(values));
}

double n_max_estimate(double alpha_mag) {
  if (alpha_mag < 0.0) throw std::invalid_argument("n_max_estimate: alpha_mag must be >= 0");
  return std::numbers::pi * alpha_mag / std::sqrt(std::numbers::ln10);
}

std::vector<Peak> find_peaks(const PhaseSpaceGrid& grid) {
  const int n = grid.resolution();
  const auto& q = grid.values();
  std::vector<std::size_t> order(q.size());
  std::iota(order.begin(), order.end(), 0);
  // Stable descending order keeps ties deterministic.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return q[a] > q[b]; });

  // Sweep the superlevel set downward; when two components meet at a saddle,
  // the one with the lower summit dies with prominence summit - saddle.
  DisjointSets sets(q.size());
  std::vector<char> active(q.size(), 0);
  std::vector<std::size_t> summit(q.size());
  std::vector<Peak> peaks;
  for (std::size_t idx : order) {
    const int i = static_cast<int>(idx) / n;
    const int j = static_cast<int>(idx) % n;
    active[idx] = 1;
    summit[idx] = idx;
    std::vector<std::size_t> roots;
    for_each_neighbor(i, j, n, [&](int ii, int jj) {
      const std::size_t nb = static_cast<std::size_t>(ii) * n + jj;
      if (!active[nb]) return;
      const std::size_t r = sets.find(nb);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    });
    if (roots.empty()) continue;
    std::stable_sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
      return q[summit[a]] > q[summit[b]];
    });
    const std::size_t keeper = roots.front();
    for (std::size_t k = 1; k < roots.size(); ++k) {
      const std::size_t top = summit[roots[k]];
      peaks.push_back({static_cast<int>(top) / n, static_cast<int>(top) % n, q[top], q[top] - q[idx]});
      sets.attach(roots[k], keeper);
    }
    sets.attach(idx, keeper);
  }
  if (!order.empty()) {
    const std::size_t top = order.front();
    peaks.push_back({static_cast<int>(top) / n, static_cast<int>(top) % n, q[top], q[top]});
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [](const Peak& a, const Peak& b) { return a.prominence > b.prominence; });
  return peaks;
}

int count_peaks(const PhaseSpaceGrid& grid, double rel_threshold, double min_rel_prominence) {
  if (!(rel_threshold > 0.0 && rel_threshold < 1.0))
    throw std::invalid_argument("count_peaks: rel_threshold must lie in (0, 1)");
  const double top = grid.max();
  if (!(top > 0.0)) return 0;
  int count = 0;
  for (const Peak& peak : find_peaks(grid))
    if (peak.height >= rel_threshold * top && peak.prominence >= min_rel_prominence * peak.height)
      ++count;
  return count;
}

int count_superlevel_components(const PhaseSpaceGrid& grid, double rel_level) {
  const int n = grid.resolution();
  const double top = grid.max();
  if (!(top > 0.0)) return 0;
  const double level = rel_level * top;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::pair<int, int>> stack;
  int components = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (seen[i * n + j] || grid.at(i, j) < level) continue;
      ++components;
      seen[i * n + j] = 1;
      stack.push_back({i, j});
      while (!stack.empty()) {
        const auto [ci, cj] = stack.back();
        stack.pop_back();
        for_each_neighbor(ci, cj, n, [&](int ii, int jj) {
          if (seen[ii * n + jj] || grid.at(ii, jj) < level) return;
          seen[ii * n + jj] = 1;
          stack.push_back({ii, jj});
        });
      }
    }
  return components;
}

}  // namespace kerrsplit
