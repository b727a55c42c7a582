#include "kerrsplit/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kerrsplit/error.hpp"

namespace kerrsplit {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Artifact, std::string_view>, 5> kArtifactNames{{
    {Artifact::EntropyCurve, "entropy-curve"},
    {Artifact::EntropySurface, "entropy-surface"},
    {Artifact::HusimiGrid, "husimi-grid"},
    {Artifact::NegativityVsGammaTau, "negativity-vs-gammatau"},
    {Artifact::NegativityVsNu, "negativity-vs-nu"},
}};

void reject_unknown(const json& object, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) throw ConfigError(path, "expected an object");
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) throw ConfigError(path.empty() ? key : path + "." + key, "unknown field");
  }
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

template <class T>
void read(const json& object, const std::string& path, const char* key, T& target) {
  if (!object.contains(key)) return;
  try {
    target = object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(join(path, key), std::string("wrong type (") + e.what() + ")");
  }
}

double read_tau(const json& value, const std::string& field) {
  try {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) return parse_tau(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(field, e.what());
  }
  throw ConfigError(field, "expected a number or a \"p/q\" string");
}

std::vector<double> read_taus(const json& object, const std::string& path, const char* key,
                              std::vector<double> fallback) {
  if (!object.contains(key)) return fallback;
  const json& list = object.at(key);
  const std::string field = join(path, key);
  if (!list.is_array()) throw ConfigError(field, "expected an array");
  std::vector<double> taus;
  for (std::size_t i = 0; i < list.size(); ++i)
    taus.push_back(read_tau(list[i], field + "[" + std::to_string(i) + "]"));
  return taus;
}

GridSpec read_grid(const json& object, const std::string& path, GridSpec grid) {
  reject_unknown(object, path, {"start", "stop", "steps"});
  read(object, path, "start", grid.start);
  read(object, path, "stop", grid.stop);
  read(object, path, "steps", grid.steps);
  return grid;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> pts(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) pts[i] = i == steps ? stop : start + (stop - start) * i / steps;
  return pts;
}

void GridSpec::validate(const std::string& field) const {
  if (steps < 1) throw ConfigError(field + ".steps", "must be >= 1");
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw ConfigError(field, "start and stop must be finite");
}

std::string_view to_string(Artifact artifact) {
  for (const auto& [a, name] : kArtifactNames)
    if (a == artifact) return name;
  return "unknown";
}

Artifact artifact_from_string(std::string_view name) {
  for (const auto& [a, n] : kArtifactNames)
    if (n == name) return a;
  throw ConfigError("outputs", "unknown artifact '" + std::string(name) + "'");
}

double parse_tau(std::string_view text) {
  auto parse_number = [&](std::string_view s) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("cannot parse time '" + std::string(text) + "'");
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_number(text);
  const double den = parse_number(text.substr(slash + 1));
  if (den == 0.0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return parse_number(text.substr(0, slash)) / den;
}

void ScenarioConfig::validate() const {
  if (name.empty()) throw ConfigError("name", "must not be empty");
  if (name.find_first_of("/\\") != std::string::npos)
    throw ConfigError("name", "must not contain path separators");
  if (!std::isfinite(initial.nu) || initial.nu < 0.0) throw ConfigError("initial.nu", "must be finite and >= 0");
  if (!std::isfinite(initial.theta)) throw ConfigError("initial.theta", "must be finite");
  if (initial.m < 0) throw ConfigError("initial.m", "must be >= 0");
  if (!(cutoff.tail_tol > 0.0 && cutoff.tail_tol < 1.0))
    throw ConfigError("cutoff.tail_tol", "must lie in (0, 1)");
  if (cutoff.safety_margin < 0) throw ConfigError("cutoff.safety_margin", "must be >= 0");
  time_grid.validate("time_grid");
  if (nu_grid) {
    nu_grid->validate("nu_grid");
    if (nu_grid->start < 0.0 || nu_grid->stop < 0.0) throw ConfigError("nu_grid", "nu must be >= 0");
  }
  if (channel) {
    const ChannelConfig& c = *channel;
    if (!(c.gamma1 >= 0.0) || !(c.gamma2 >= 0.0))
      throw ConfigError("channel", "gamma1 and gamma2 must be >= 0");
    c.gamma_tau_grid.validate("channel.gamma_tau_grid");
    if (c.gamma_tau_grid.start < 0.0 || c.gamma_tau_grid.stop < 0.0)
      throw ConfigError("channel.gamma_tau_grid", "gamma_tau must be >= 0");
    if (!(c.fixed_gamma_tau >= 0.0)) throw ConfigError("channel.fixed_gamma_tau", "must be >= 0");
    if (c.taus.empty()) throw ConfigError("channel.taus", "must not be empty");
    for (double t : c.taus)
      if (!std::isfinite(t)) throw ConfigError("channel.taus", "must be finite");
    if (c.m_values.empty()) throw ConfigError("channel.m_values", "must not be empty");
    for (int m : c.m_values)
      if (m < 0) throw ConfigError("channel.m_values", "must be >= 0");
    if (c.dimension_cap == 0) throw ConfigError("channel.dimension_cap", "must be > 0");
  }
  if (husimi.resolution < 2) throw ConfigError("husimi.resolution", "must be >= 2");
  if (husimi.half_width && !(*husimi.half_width > 0.0))
    throw ConfigError("husimi.half_width", "must be > 0");
  if (!(husimi.rel_threshold > 0.0 && husimi.rel_threshold < 1.0))
    throw ConfigError("husimi.rel_threshold", "must lie in (0, 1)");
  if (!(husimi.min_rel_prominence >= 0.0 && husimi.min_rel_prominence < 1.0))
    throw ConfigError("husimi.min_rel_prominence", "must lie in [0, 1)");
  for (double t : husimi.taus)
    if (!std::isfinite(t)) throw ConfigError("husimi.taus", "must be finite");
  if (analysis.q_max < 1) throw ConfigError("analysis.q_max", "must be >= 1");
  if (!(analysis.min_prominence >= 0.0)) throw ConfigError("analysis.min_prominence", "must be >= 0");
  if (outputs.empty()) throw ConfigError("outputs", "must not be empty");
  for (Artifact a : outputs) {
    if (a == Artifact::EntropySurface && !nu_grid)
      throw ConfigError("nu_grid", "required by entropy-surface");
    if ((a == Artifact::NegativityVsGammaTau || a == Artifact::NegativityVsNu) && !channel)
      throw ConfigError("channel", "required by " + std::string(to_string(a)));
    if (a == Artifact::NegativityVsNu && !nu_grid)
      throw ConfigError("nu_grid", "required by negativity-vs-nu");
    if (a == Artifact::HusimiGrid && husimi.taus.empty())
      throw ConfigError("husimi.taus", "required by husimi-grid");
  }
}

ScenarioConfig parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  reject_unknown(doc, "", {"name", "initial", "time_grid", "nu_grid", "channel", "husimi",
                           "outputs", "cutoff", "analysis", "threads"});
  ScenarioConfig cfg;
  read(doc, "", "name", cfg.name);
  read(doc, "", "threads", cfg.threads);

  if (doc.contains("initial")) {
    const json& j = doc["initial"];
    reject_unknown(j, "initial", {"nu", "theta", "m"});
    read(j, "initial", "nu", cfg.initial.nu);
    read(j, "initial", "theta", cfg.initial.theta);
    read(j, "initial", "m", cfg.initial.m);
  }
  if (doc.contains("time_grid")) cfg.time_grid = read_grid(doc["time_grid"], "time_grid", cfg.time_grid);
  if (doc.contains("nu_grid")) cfg.nu_grid = read_grid(doc["nu_grid"], "nu_grid", GridSpec{0.0, 20.0, 40});
  if (doc.contains("channel")) {
    const json& j = doc["channel"];
    reject_unknown(j, "channel", {"gamma1", "gamma2", "gamma_tau_grid", "fixed_gamma_tau", "taus",
                                  "m_values", "dimension_cap"});
    ChannelConfig c;
    read(j, "channel", "gamma1", c.gamma1);
    read(j, "channel", "gamma2", c.gamma2);
    if (j.contains("gamma_tau_grid"))
      c.gamma_tau_grid = read_grid(j["gamma_tau_grid"], "channel.gamma_tau_grid", c.gamma_tau_grid);
    read(j, "channel", "fixed_gamma_tau", c.fixed_gamma_tau);
    c.taus = read_taus(j, "channel", "taus", c.taus);
    read(j, "channel", "m_values", c.m_values);
    read(j, "channel", "dimension_cap", c.dimension_cap);
    cfg.channel = c;
  }
  if (doc.contains("husimi")) {
    const json& j = doc["husimi"];
    reject_unknown(j, "husimi", {"taus", "resolution", "half_width", "rel_threshold", "min_rel_prominence"});
    cfg.husimi.taus = read_taus(j, "husimi", "taus", cfg.husimi.taus);
    read(j, "husimi", "resolution", cfg.husimi.resolution);
    if (j.contains("half_width") && !j["half_width"].is_null()) {
      double hw = 0.0;
      read(j, "husimi", "half_width", hw);
      cfg.husimi.half_width = hw;
    }
    read(j, "husimi", "rel_threshold", cfg.husimi.rel_threshold);
    read(j, "husimi", "min_rel_prominence", cfg.husimi.min_rel_prominence);
  }
  if (doc.contains("outputs")) {
    std::vector<std::string> names;
    read(doc, "", "outputs", names);
    cfg.outputs.clear();
    for (const auto& n : names) cfg.outputs.push_back(artifact_from_string(n));
  }
  if (doc.contains("cutoff")) {
    const json& j = doc["cutoff"];
    reject_unknown(j, "cutoff", {"tail_tol", "safety_margin"});
    read(j, "cutoff", "tail_tol", cfg.cutoff.tail_tol);
    read(j, "cutoff", "safety_margin", cfg.cutoff.safety_margin);
  }
  if (doc.contains("analysis")) {
    const json& j = doc["analysis"];
    reject_unknown(j, "analysis", {"q_max", "min_prominence"});
    read(j, "analysis", "q_max", cfg.analysis.q_max);
    read(j, "analysis", "min_prominence", cfg.analysis.min_prominence);
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace kerrsplit
