#pragma once

#include <functional>
#include <vector>

#include "nsfv/config.hpp"
#include "nsfv/diagnostics.hpp"
#include "nsfv/scheme.hpp"
#include "nsfv/state.hpp"

namespace nsfv {

/// Called after the initial state and after every completed step.
using StepObserver = std::function<void(const State&, const DiagnosticsRecord&)>;

struct RunResult {
    State final_state;
    std::vector<DiagnosticsRecord> records;  // records[0] describes the initial state
    double integrated_d3_l1 = 0.0;           // Sum_k dt Int |D3^k|
    double integrated_d2 = 0.0;
    double integrated_upwind_jump_rho = 0.0;
    double integrated_jump_u_heps = 0.0;
    double integrated_grad_theta = 0.0;
    double integrated_sym_grad_u = 0.0;
    int total_picard_iterations = 0;
};

/// Advances `initial` by `steps` implicit steps. Exceptions from the scheme propagate.
[[nodiscard]] RunResult run(Scheme& scheme, const State& initial, int steps, const StepObserver& observer = {});

/// Builds the scheme and initial data named by `config` and runs to t_end.
[[nodiscard]] RunResult run(const RunConfig& config, const StepObserver& observer = {});

/// `run(config)` that also writes the diagnostics CSV and VTK snapshots requested
/// by `config.output`. Records of completed steps are flushed even if a step throws.
RunResult run_with_output(const RunConfig& config, const StepObserver& observer = {});

}  // namespace nsfv
