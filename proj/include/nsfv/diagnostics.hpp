#pragma once

#include "nsfv/fields.hpp"
#include "nsfv/scheme.hpp"
#include "nsfv/state.hpp"

namespace nsfv {

/// Terms of the discrete total energy balance of one step. In exact arithmetic
/// with the step solved exactly their sum (`residual`) vanishes; the last three
/// are sums of squares.
struct EnergyTerms {
    double time_derivative = 0.0;     // D_t E_h
    double h_diffusion = 0.0;         // h^eps Sum_sigma |sigma| avg(rho) |jump u|^2
    double time_dissipation = 0.0;    // dt/2 Int rho^{k-1} |D_t u|^2
    double upwind_dissipation = 0.0;  // 1/2 Sum_sigma |sigma| rho^up |ubar.n| |jump u|^2
    double residual = 0.0;
};

/// Terms of the discrete entropy balance tested with phi = 1.
struct EntropyBudget {
    // Numerical production D1 split by origin; all nonnegative.
    double d1_time_rho = 0.0;
    double d1_face_rho = 0.0;
    double d1_time_theta = 0.0;
    double d1_face_theta = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    FaceField d3;               // per-face h^{eps+1}[d_E rho avg(c_v+1-s) + d_E p avg(-c_v/theta)]
    double d3_l1 = 0.0;         // Int |D3| over the dual grid
    double kappa_production = 0.0;    // -Int kappa grad_E theta . grad_E (1/theta)
    double viscous_production = 0.0;  // Int (2 mu |D_h u|^2 + lambda |div_h u|^2) / theta
    double time_derivative = 0.0;     // D_t Int rho s
    double residual = 0.0;            // time_derivative - physical production - (d1 + d2)

    [[nodiscard]] double production() const noexcept { return d1 + d2; }
};

/// Discrete quantities controlled by the a priori estimates, at one time level.
struct Monitors {
    double min_rho = 0.0;
    double max_rho = 0.0;
    double min_theta = 0.0;
    double max_theta = 0.0;
    double max_speed = 0.0;
    double jump_u_heps = 0.0;        // h^eps Sum |sigma| |jump u|^2
    double upwind_jump_u = 0.0;      // Sum |sigma| rho^up |ubar.n| |jump u|^2
    double upwind_jump_rho = 0.0;    // Sum |sigma| |ubar.n| jump(rho)^2
    double grad_theta_l2sq = 0.0;    // ||grad_E theta||^2
    double sym_grad_u_l2sq = 0.0;    // ||D_h u||^2
    double u_l6 = 0.0;               // ||u||_{L^6}
};

struct DiagnosticsRecord {
    int step = 0;
    double time = 0.0;
    double mass = 0.0;
    double kinetic_energy = 0.0;
    double internal_energy = 0.0;
    double total_energy = 0.0;
    double total_entropy = 0.0;
    EnergyTerms energy;
    double entropy_production_bh = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3_l1 = 0.0;
    double entropy_residual = 0.0;
    double kappa_production = 0.0;
    double viscous_production = 0.0;
    Monitors monitors;
    int picard_iterations = 0;
    double solver_residual = 0.0;
    double wall_ms = 0.0;
};

[[nodiscard]] double total_mass(const State& s);
[[nodiscard]] double kinetic_energy(const State& s);
[[nodiscard]] double internal_energy(const State& s, const GasParams& gas);
[[nodiscard]] double total_energy(const State& s, const GasParams& gas);
[[nodiscard]] double total_entropy(const State& s, const GasParams& gas);

[[nodiscard]] EnergyTerms energy_balance(const Scheme& scheme, const State& k, const State& km1);

/// Throws PositivityLoss on a nonpositive density or temperature.
[[nodiscard]] EntropyBudget entropy_budget(const Scheme& scheme, const State& k, const State& km1);

[[nodiscard]] Monitors apriori_monitors(const Scheme& scheme, const State& s);

/// Record of the initial state: balances are zero, monitors and integrals filled in.
[[nodiscard]] DiagnosticsRecord initial_record(const Scheme& scheme, const State& s);
[[nodiscard]] DiagnosticsRecord step_record(const Scheme& scheme, const State& k, const State& km1,
                                            const StepReport& report);

}  // namespace nsfv
