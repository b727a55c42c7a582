#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kerrsplit/fock.hpp"

namespace kerrsplit {

/// Uniform grid from start to stop in `steps` intervals (steps + 1 points).
struct GridSpec {
  double start = 0.0;
  double stop = 1.0;
  int steps = 1000;

  std::vector<double> points() const;
  /// Throws ConfigError naming `field`.
  void validate(const std::string& field) const;
};

enum class Artifact {
  EntropyCurve,
  EntropySurface,
  HusimiGrid,
  NegativityVsGammaTau,
  NegativityVsNu,
};

std::string_view to_string(Artifact artifact);
Artifact artifact_from_string(std::string_view name);

struct ChannelConfig {
  double gamma1 = 0.1;
  double gamma2 = 0.1;
  GridSpec gamma_tau_grid{0.0, 1.0, 50};
  double fixed_gamma_tau = 0.3;        ///< for negativity-vs-nu scans
  std::vector<double> taus{0.5, 1.0 / 3.0};  ///< Kerr times at which the state is damped
  std::vector<int> m_values{0, 5, 10};
  std::size_t dimension_cap = 4096;
};

struct HusimiConfig {
  std::vector<double> taus{0.25, 0.2, 1.0 / 6.0};
  int resolution = 201;
  std::optional<double> half_width;  ///< default_window() when absent
  double rel_threshold = 0.1;
  double min_rel_prominence = 0.2;
};

struct AnalysisConfig {
  int q_max = 12;               ///< denominator cap for revival annotation
  double min_prominence = 0.05; ///< ebits a local minimum must dip by
};

/// One simulation run. Fully deterministic; `threads` only changes wall time.
struct ScenarioConfig {
  std::string name = "scenario";
  InitialStateSpec initial{5.0, std::numbers::pi / 4.0, 0};
  GridSpec time_grid{0.0, 1.0, 1000};
  std::optional<GridSpec> nu_grid;
  std::optional<ChannelConfig> channel;
  HusimiConfig husimi;
  std::vector<Artifact> outputs{Artifact::EntropyCurve};
  CutoffPolicy cutoff;
  AnalysisConfig analysis;
  unsigned threads = 0;

  void validate() const;
};

/// Parses a JSON scenario document; unspecified fields keep their defaults.
/// Times may be numbers or "p/q" strings.
ScenarioConfig parse_scenario(std::string_view json_text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// "p/q" or a decimal literal.
double parse_tau(std::string_view text);

}  // namespace kerrsplit
