// kerrsplit command-line front end.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "kerrsplit/error.hpp"
#include "kerrsplit/kerr.hpp"
#include "kerrsplit/output.hpp"

namespace {

using namespace kerrsplit;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitOracleFailed = 3;

struct Overrides {
  std::string config;
  std::optional<double> nu;
  std::optional<int> m;
  std::optional<int> tau_steps;
  std::string out_dir = ".";
  std::optional<unsigned> threads;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "scenario JSON file")->check(CLI::ExistingFile);
  cmd->add_option("--nu", o.nu, "mean photon number |alpha|^2");
  cmd->add_option("--m", o.m, "number of added photons");
  cmd->add_option("--tau-steps", o.tau_steps, "intervals in the time grid");
  cmd->add_option("--out-dir", o.out_dir, "directory for CSV/JSON output");
  cmd->add_option("--threads", o.threads, "worker threads, 0 = all cores");
}

ScenarioConfig build_config(const Overrides& o, Artifact artifact) {
  ScenarioConfig config = o.config.empty() ? ScenarioConfig{} : load_scenario(o.config);
  if (o.config.empty()) {
    config.outputs = {artifact};
    if (artifact == Artifact::EntropySurface) config.nu_grid = GridSpec{0.0, 20.0, 40};
    // m = 10 above nu = 10 does not fit the default dimension cap.
    if (artifact == Artifact::NegativityVsNu) config.nu_grid = GridSpec{0.0, 10.0, 10};
    if (artifact == Artifact::NegativityVsGammaTau || artifact == Artifact::NegativityVsNu)
      config.channel = ChannelConfig{};
  }
  if (o.nu) config.initial.nu = *o.nu;
  if (o.m) {
    config.initial.m = *o.m;
    if (config.channel) config.channel->m_values = {*o.m};
  }
  if (o.tau_steps) config.time_grid.steps = *o.tau_steps;
  if (o.threads) config.threads = *o.threads;
  config.validate();
  return config;
}

void report(const EmittedFiles& files) {
  for (const auto& p : files.paths) std::cout << p.string() << '\n';
}

int run_one(const Overrides& o, Artifact artifact) {
  const ScenarioConfig config = build_config(o, artifact);
  report(run_artifact(config, artifact, o.out_dir));
  return kExitOk;
}

int run_all(const Overrides& o) {
  if (o.config.empty()) throw ConfigError("config", "the run subcommand needs --config");
  const ScenarioConfig config = build_config(o, Artifact::EntropyCurve);
  for (Artifact artifact : config.outputs) report(run_artifact(config, artifact, o.out_dir));
  return kExitOk;
}

int oracle_check(double nu, double theta, double tolerance) {
  InitialStateSpec spec{nu, theta, 0};
  spec.validate();
  const std::vector<std::pair<int, int>> fractions{{1, 2}, {1, 3}, {2, 3}, {1, 4}};
  bool all = true;
  for (const auto& check : run_oracle_suite(spec, fractions, tolerance)) {
    std::cout << fmt::format("{} tau={}/{} fidelity={:.15f} 1-F={:.3e}\n", check.passed ? "PASS" : "FAIL",
                             check.p, check.q, check.fidelity, 1.0 - check.fidelity);
    all = all && check.passed;
  }
  return all ? kExitOk : kExitOracleFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kerr-evolved coherent and photon-added coherent states on a beam splitter"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  Overrides o;
  auto* entropy = app.add_subcommand("entropy", "entanglement entropy E(tau)");
  auto* surface = app.add_subcommand("surface", "E over the (tau, nu) grid");
  auto* husimi = app.add_subcommand("husimi", "Husimi Q grids and peak counts");
  auto* decohere = app.add_subcommand("decohere", "log-negativity under photon loss");
  auto* run = app.add_subcommand("run", "every output listed in the config");
  for (auto* cmd : {entropy, surface, husimi, decohere, run}) add_common(cmd, o);
  bool over_nu = false;
  decohere->add_flag("--over-nu", over_nu, "scan nu at fixed gamma_tau instead of gamma_tau");

  auto* oracle = app.add_subcommand("oracle-check", "Kerr evolution vs coherent-superposition oracle");
  double oracle_nu = 5.0;
  double oracle_theta = std::numbers::pi / 4.0;
  double oracle_tol = 1e-10;
  oracle->add_option("--nu", oracle_nu, "mean photon number")->capture_default_str();
  oracle->add_option("--theta", oracle_theta, "phase of alpha")->capture_default_str();
  oracle->add_option("--tol", oracle_tol, "allowed 1 - fidelity")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*entropy) return run_one(o, Artifact::EntropyCurve);
    if (*surface) return run_one(o, Artifact::EntropySurface);
    if (*husimi) return run_one(o, Artifact::HusimiGrid);
    if (*decohere) return run_one(o, over_nu ? Artifact::NegativityVsNu : Artifact::NegativityVsGammaTau);
    if (*run) return run_all(o);
    if (*oracle) return oracle_check(oracle_nu, oracle_theta, oracle_tol);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ScenarioInfeasible& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const CutoffTooSmall& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
