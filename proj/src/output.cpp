#include "kerrsplit/output.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "kerrsplit/error.hpp"

#ifndef KERRSPLIT_VERSION
#define KERRSPLIT_VERSION "0.0.0"
#endif

namespace kerrsplit {
namespace {

using nlohmann::ordered_json;

std::string num(double value) { return fmt::format("{:.12g}", value); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

void write_json(const std::filesystem::path& path, const ordered_json& doc) {
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
}

ordered_json initial_json(const InitialStateSpec& spec) {
  return {{"nu", spec.nu}, {"m", spec.m}, {"theta", spec.theta}};
}

ordered_json window_json(const GridWindow& w) {
  return {{"x_min", w.x_min}, {"x_max", w.x_max}, {"p_min", w.p_min},
          {"p_max", w.p_max}, {"resolution", w.resolution}};
}

ordered_json summary_head(const ScenarioConfig& config, Artifact artifact) {
  return {{"tool_version", tool_version()},
          {"scenario", config.name},
          {"artifact", to_string(artifact)},
          {"initial", initial_json(config.initial)}};
}

// Rows sharing (nu, m, revival_tau) form one curve.
ordered_json curve_maxima(const std::vector<CurveRecord>& records) {
  ordered_json curves = ordered_json::array();
  for (const auto& r : records) {
    ordered_json* match = nullptr;
    for (auto& c : curves)
      if (c["nu"] == r.meta.nu && c["m"] == r.meta.m &&
          c["revival_tau"] == (r.revival_tau ? ordered_json(*r.revival_tau) : ordered_json()))
        match = &c;
    if (!match) {
      curves.push_back({{"nu", r.meta.nu},
                        {"m", r.meta.m},
                        {"revival_tau", r.revival_tau ? ordered_json(*r.revival_tau) : ordered_json()},
                        {"n_cut", r.meta.n_cut},
                        {"points", 0},
                        {"first", r.ordinate},
                        {"last", r.ordinate},
                        {"max", r.ordinate},
                        {"argmax", r.abscissa}});
      match = &curves.back();
    }
    auto& c = *match;
    c["points"] = c["points"].get<int>() + 1;
    c["last"] = r.ordinate;
    if (r.ordinate > c["max"].get<double>()) {
      c["max"] = r.ordinate;
      c["argmax"] = r.abscissa;
    }
  }
  return curves;
}

}  // namespace

std::string_view tool_version() { return KERRSPLIT_VERSION; }

void write_curve_csv(std::ostream& out, const std::vector<CurveRecord>& records,
                     std::string_view scenario, Artifact artifact) {
  out << "# tool: kerrsplit " << tool_version() << '\n';
  out << "# scenario: " << scenario << '\n';
  out << "# artifact: " << to_string(artifact) << '\n';
  if (!records.empty()) {
    const RecordMeta& first = records.front().meta;
    bool same_nu = true, same_m = true, same_cut = true;
    for (const auto& r : records) {
      same_nu = same_nu && r.meta.nu == first.nu;
      same_m = same_m && r.meta.m == first.m;
      same_cut = same_cut && r.meta.n_cut == first.n_cut;
    }
    const std::string per_row = "per-row";
    out << "# nu: " << (same_nu ? num(first.nu) : per_row) << '\n';
    out << "# m: " << (same_m ? std::to_string(first.m) : per_row) << '\n';
    out << "# theta: " << num(first.theta) << '\n';
    out << "# n_cut: " << (same_cut ? std::to_string(first.n_cut) : per_row) << '\n';
  }
  const std::string abscissa = records.empty() ? "x" : records.front().abscissa_label;
  const std::string ordinate = records.empty() ? "y" : records.front().ordinate_label;
  out << abscissa << ',' << ordinate << ",nu,m,theta,n_cut,revival_tau,note\n";
  for (const auto& r : records) {
    out << num(r.abscissa) << ',' << num(r.ordinate) << ',' << num(r.meta.nu) << ',' << r.meta.m
        << ',' << num(r.meta.theta) << ',' << r.meta.n_cut << ','
        << (r.revival_tau ? num(*r.revival_tau) : std::string()) << ',' << csv_field(r.note)
        << '\n';
  }
}

void write_grid_csv(std::ostream& out, const PhaseSpaceGrid& grid, double tau) {
  const GridWindow& w = grid.window();
  out << "# tool: kerrsplit " << tool_version() << '\n';
  out << "# tau: " << num(tau) << '\n';
  out << "# resolution: " << w.resolution << '\n';
  out << "x,p,Q\n";
  for (int i = 0; i < w.resolution; ++i)
    for (int j = 0; j < w.resolution; ++j)
      out << num(w.x(i)) << ',' << num(w.p(j)) << ',' << fmt::format("{:.17g}", grid.at(i, j)) << '\n';
}

void write_dense_grid(std::ostream& out, const PhaseSpaceGrid& grid, double tau) {
  ordered_json header = window_json(grid.window());
  header["layout"] = "row i = x(i), column j = p(j)";
  header["tau"] = tau;
  out << header.dump() << '\n';
  const int n = grid.resolution();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << fmt::format("{:.17g}", grid.at(i, j));
    }
    out << '\n';
  }
}

PhaseSpaceGrid read_dense_grid(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("dense grid: missing header");
  const auto header = nlohmann::json::parse(line);
  GridWindow w;
  w.x_min = header.at("x_min").get<double>();
  w.x_max = header.at("x_max").get<double>();
  w.p_min = header.at("p_min").get<double>();
  w.p_max = header.at("p_max").get<double>();
  w.resolution = header.at("resolution").get<int>();
  w.validate();
  const std::size_t count = std::size_t(w.resolution) * std::size_t(w.resolution);
  std::vector<double> values;
  values.reserve(count);
  std::string token;
  while (values.size() < count && in >> token) values.push_back(std::stod(token));
  if (values.size() != count) throw std::runtime_error("dense grid: truncated body");
  return PhaseSpaceGrid(w, std::move(values));
}

std::filesystem::path artifact_path(const std::filesystem::path& dir, std::string_view scenario,
                                    Artifact artifact, std::string_view extension) {
  return dir / fmt::format("{}_{}.{}", scenario, to_string(artifact), extension);
}

std::filesystem::path husimi_path(const std::filesystem::path& dir, std::string_view scenario,
                                  double tau, std::string_view extension) {
  return dir / fmt::format("{}_husimi-grid_tau{:.6g}.{}", scenario, tau, extension);
}

EmittedFiles emit_entropy_curve(const ScenarioConfig& config, const EntropyCurveResult& result,
                                const std::filesystem::path& dir) {
  EmittedFiles files;
  files.paths.push_back(artifact_path(dir, config.name, Artifact::EntropyCurve, "csv"));
  {
    auto out = open_output(files.paths.back());
    write_curve_csv(out, result.records, config.name, Artifact::EntropyCurve);
  }
  ordered_json doc = summary_head(config, Artifact::EntropyCurve);
  doc["n_cut"] = result.n_cut;
  doc["points"] = result.records.size();
  doc["curves"] = curve_maxima(result.records);
  ordered_json minima = ordered_json::array();
  for (const auto& m : result.minima) {
    const double target = std::log2(double(m.fraction.q));
    minima.push_back({{"tau", m.tau},
                      {"entropy", m.value},
                      {"prominence", m.prominence},
                      {"fraction", fmt::format("{}/{}", m.fraction.p, m.fraction.q)},
                      {"log2_q", target},
                      {"deviation_from_log2_q", m.value - target}});
  }
  doc["local_minima"] = minima;
  files.paths.push_back(artifact_path(dir, config.name, Artifact::EntropyCurve, "json"));
  write_json(files.paths.back(), doc);
  return files;
}

EmittedFiles emit_curve(const ScenarioConfig& config, Artifact artifact,
                        const std::vector<CurveRecord>& records, const std::filesystem::path& dir) {
  EmittedFiles files;
  files.paths.push_back(artifact_path(dir, config.name, artifact, "csv"));
  {
    auto out = open_output(files.paths.back());
    write_curve_csv(out, records, config.name, artifact);
  }
  ordered_json doc = summary_head(config, artifact);
  doc["points"] = records.size();
  doc["curves"] = curve_maxima(records);
  if (config.channel) {
    doc["channel"] = {{"gamma1", config.channel->gamma1},
                      {"gamma2", config.channel->gamma2},
                      {"dimension_cap", config.channel->dimension_cap}};
  }
  files.paths.push_back(artifact_path(dir, config.name, artifact, "json"));
  write_json(files.paths.back(), doc);
  return files;
}

EmittedFiles emit_husimi(const ScenarioConfig& config, const std::vector<HusimiSnapshot>& snapshots,
                         const std::filesystem::path& dir) {
  EmittedFiles files;
  ordered_json grids = ordered_json::array();
  for (const auto& s : snapshots) {
    const auto csv = husimi_path(dir, config.name, s.tau, "csv");
    const auto dat = husimi_path(dir, config.name, s.tau, "dat");
    {
      auto out = open_output(csv);
      write_grid_csv(out, s.grid, s.tau);
    }
    {
      auto out = open_output(dat);
      write_dense_grid(out, s.grid, s.tau);
    }
    files.paths.push_back(csv);
    files.paths.push_back(dat);
    grids.push_back({{"tau", s.tau},
                     {"n_cut", s.n_cut},
                     {"count_peaks", s.peak_count},
                     {"superlevel_components", s.superlevel_components},
                     {"entropy", s.entropy},
                     {"q_max", s.grid.max()},
                     {"q_integral", s.grid.integral()},
                     {"csv", csv.filename().string()},
                     {"dense", dat.filename().string()}});
  }
  ordered_json doc = summary_head(config, Artifact::HusimiGrid);
  doc["n_max_estimate"] = n_max_estimate(std::sqrt(config.initial.nu));
  doc["rel_threshold"] = config.husimi.rel_threshold;
  doc["min_rel_prominence"] = config.husimi.min_rel_prominence;
  if (!snapshots.empty()) doc["window"] = window_json(snapshots.front().grid.window());
  doc["grids"] = grids;
  files.paths.push_back(artifact_path(dir, config.name, Artifact::HusimiGrid, "json"));
  write_json(files.paths.back(), doc);
  return files;
}

EmittedFiles run_artifact(const ScenarioConfig& config, Artifact artifact,
                          const std::filesystem::path& dir) {
  switch (artifact) {
    case Artifact::EntropyCurve:
      return emit_entropy_curve(config, run_entropy_curve(config), dir);
    case Artifact::EntropySurface:
      return emit_curve(config, artifact, run_entropy_surface(config), dir);
    case Artifact::HusimiGrid:
      return emit_husimi(config, run_husimi(config), dir);
    case Artifact::NegativityVsGammaTau:
    case Artifact::NegativityVsNu:
      return emit_curve(config, artifact, run_decoherence_scan(config, artifact), dir);
  }
  throw std::invalid_argument("run_artifact: unknown artifact");
}

}  // namespace kerrsplit
