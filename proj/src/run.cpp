#include "nsfv/run.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "nsfv/io.hpp"
#include "nsfv/problems.hpp"

namespace nsfv {

RunResult run(Scheme& scheme, const State& initial, int steps, const StepObserver& observer) {
    RunResult result{initial, {}};
    result.records.reserve(static_cast<std::size_t>(steps) + 1);
    result.records.push_back(initial_record(scheme, initial));
    if (observer) observer(initial, result.records.back());
    const double dt = scheme.dt();
    for (int s = 0; s < steps; ++s) {
        StepResult next = scheme.step(result.final_state);
        DiagnosticsRecord rec = step_record(scheme, next.state, result.final_state, next.report);
        result.integrated_d3_l1 += dt * rec.d3_l1;
        result.integrated_d2 += dt * rec.d2;
        result.integrated_upwind_jump_rho += dt * rec.monitors.upwind_jump_rho;
        result.integrated_jump_u_heps += dt * rec.monitors.jump_u_heps;
        result.integrated_grad_theta += dt * rec.monitors.grad_theta_l2sq;
        result.integrated_sym_grad_u += dt * rec.monitors.sym_grad_u_l2sq;
        result.total_picard_iterations += rec.picard_iterations;
        result.final_state = std::move(next.state);
        result.records.push_back(rec);
        if (observer) observer(result.final_state, result.records.back());
    }
    return result;
}

RunResult run(const RunConfig& config, const StepObserver& observer) {
    config.validate();
    Scheme scheme(config, forcing_preset(config));
    const State initial = scheme.init_state(initial_preset(config));
    return run(scheme, initial, config.step_count(), observer);
}

RunResult run_with_output(const RunConfig& config, const StepObserver& observer) {
    config.validate();
    const OutputSettings& out = config.output;
    const std::filesystem::path dir(out.output_dir);
    std::filesystem::create_directories(dir);

    std::vector<DiagnosticsRecord> seen;
    const auto write_csv = [&] {
        if (!out.diagnostics_file.empty()) write_diagnostics_file((dir / out.diagnostics_file).string(), seen);
    };
    const StepObserver tee = [&](const State& s, const DiagnosticsRecord& r) {
        seen.push_back(r);
        if (out.snapshot_every > 0 && s.step % out.snapshot_every == 0) {
            char name[64];
            std::snprintf(name, sizeof name, "_%06d.vtk", s.step);
            write_vtk_file((dir / (out.snapshot_prefix + name)).string(), s);
        }
        if (observer) observer(s, r);
    };
    try {
        RunResult result = run(config, tee);
        write_csv();
        return result;
    } catch (...) {
        write_csv();
        throw;
    }
}

}  // namespace nsfv
