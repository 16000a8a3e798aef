#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nsfv/flux.hpp"
#include "nsfv/mesh.hpp"
#include "nsfv/thermo.hpp"

namespace nsfv {

enum class LinearSolverKind { direct, bicgstab };

struct SolverSettings {
    double picard_tol = 1e-10;
    int max_picard = 200;
    double omega = 1.0;  // under-relaxation in (0,1]
    double linear_tol = 1e-12;
    LinearSolverKind linear_solver = LinearSolverKind::bicgstab;
};

struct OutputSettings {
    std::string output_dir = ".";
    std::string diagnostics_file = "diagnostics.csv";  // empty (config value "none") disables
    int snapshot_every = 0;                          // 0 disables VTK snapshots
    std::string snapshot_prefix = "snapshot";
};

enum class StudyMode { cauchy, mms, reference };

/// Refinement study settings used by the `converge` and `mms` subcommands.
struct StudySettings {
    std::vector<Index> grids{16, 32, 64};
    StudyMode mode = StudyMode::cauchy;
    Index reference_n = 128;
};

/// Everything needed to set up and run one simulation.
struct RunConfig {
    int dim = 2;
    Index n = 32;
    double length = 1.0;
    GasParams gas;
    double epsilon = 0.6;
    double c_dt = 0.1;  // dt = c_dt * h
    double t_end = 0.1;
    SolverSettings solver;
    std::string initial = "smooth";  // constant | smooth | mms
    std::string forcing = "none";    // none | mms
    OutputSettings output;
    StudySettings study;
    int trials = 100;
    std::uint64_t seed = 20240611;

    [[nodiscard]] Mesh mesh() const { return Mesh(dim, n, length); }
    [[nodiscard]] double h() const { return length / static_cast<double>(n); }
    [[nodiscard]] FluxParams flux() const { return FluxParams(epsilon, h()); }
    [[nodiscard]] double dt() const { return c_dt * h(); }
    /// Number of fixed-size steps needed to reach t_end (the last step may overshoot by < dt).
    [[nodiscard]] int step_count() const;

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

/// Sets one key from its textual value; throws ConfigError on unknown keys or bad values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Parses `key = value` lines with `#` comments. Errors carry the source name and line number.
[[nodiscard]] RunConfig parse_config(std::istream& in, const std::string& source = "<input>");
[[nodiscard]] RunConfig parse_config_file(const std::string& path);

/// Applies `key=value` overrides on top of an existing config, then validates.
void apply_overrides(RunConfig& config, const std::vector<std::string>& overrides);

/// Resolved configuration as `key = value` lines, parseable by parse_config.
[[nodiscard]] std::string to_string(const RunConfig& config);

}  // namespace nsfv
