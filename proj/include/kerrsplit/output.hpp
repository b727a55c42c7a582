#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kerrsplit/runners.hpp"

namespace kerrsplit {

/// Library version stamped into every artifact.
std::string_view tool_version();

/// `#`-prefixed metadata block, header row, then one line per record.
void write_curve_csv(std::ostream& out, const std::vector<CurveRecord>& records,
                     std::string_view scenario, Artifact artifact);

/// x, p, Q rows, x-major.
void write_grid_csv(std::ostream& out, const PhaseSpaceGrid& grid, double tau);

/// One-line JSON header (window, resolution, layout, tau) followed by
/// `resolution` whitespace-separated rows of Q; row i is x(i).
void write_dense_grid(std::ostream& out, const PhaseSpaceGrid& grid, double tau);

/// Reads what write_dense_grid wrote.
PhaseSpaceGrid read_dense_grid(std::istream& in);

/// `<dir>/<scenario>_<artifact>.<extension>`
std::filesystem::path artifact_path(const std::filesystem::path& dir, std::string_view scenario,
                                    Artifact artifact, std::string_view extension);

/// `<dir>/<scenario>_husimi-grid_tau<tau>.<extension>`
std::filesystem::path husimi_path(const std::filesystem::path& dir, std::string_view scenario,
                                  double tau, std::string_view extension);

/// Files produced by one artifact run.
struct EmittedFiles {
  std::vector<std::filesystem::path> paths;
};

EmittedFiles emit_entropy_curve(const ScenarioConfig& config, const EntropyCurveResult& result,
                                const std::filesystem::path& dir);
EmittedFiles emit_curve(const ScenarioConfig& config, Artifact artifact,
                        const std::vector<CurveRecord>& records, const std::filesystem::path& dir);
EmittedFiles emit_husimi(const ScenarioConfig& config, const std::vector<HusimiSnapshot>& snapshots,
                         const std::filesystem::path& dir);

/// Runs the artifact and writes its files.
EmittedFiles run_artifact(const ScenarioConfig& config, Artifact artifact,
                          const std::filesystem::path& dir);

}  // namespace kerrsplit
