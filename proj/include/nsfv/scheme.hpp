#pragma once

#include <memory>
#include <optional>

#include "nsfv/config.hpp"
#include "nsfv/fields.hpp"
#include "nsfv/flux.hpp"
#include "nsfv/problems.hpp"
#include "nsfv/state.hpp"

namespace nsfv {

/// Per-cell residuals of the continuity, momentum and internal energy equations.
struct Residual {
    CellField mass;
    CellVectorField momentum;
    CellField energy;
};

/// Sources projected onto the grid.
struct ProjectedForcing {
    CellField mass;
    CellVectorField momentum;
    CellField energy;
};

struct StepReport {
    int picard_iterations = 0;
    double final_residual_norm = 0.0;
    int linear_solver_iterations = 0;
    double wall_time = 0.0;  // seconds
};

struct StepResult {
    State state;
    StepReport report;
};

/// Upper bound on threads used by the linear algebra backend (1 = serial).
void set_thread_count(int threads);

/// The fully implicit finite volume scheme on one grid: owns the discretization
/// parameters, evaluates residuals and advances a state by one Picard-converged step.
///
/// Each Picard sweep freezes the advecting face velocity and the nonlinear
/// coefficients at the current iterate and solves, in order, the linearized
/// continuity, momentum and internal energy equations.
class Scheme {
public:
    explicit Scheme(const RunConfig& config, std::optional<Forcing> forcing = std::nullopt);
    ~Scheme();
    Scheme(Scheme&&) noexcept;
    Scheme& operator=(Scheme&&) noexcept;
    Scheme(const Scheme&) = delete;
    Scheme& operator=(const Scheme&) = delete;

    [[nodiscard]] const RunConfig& config() const noexcept { return config_; }
    [[nodiscard]] const Mesh& mesh() const noexcept { return mesh_; }
    [[nodiscard]] const GasParams& gas() const noexcept { return config_.gas; }
    [[nodiscard]] const FluxParams& flux() const noexcept { return flux_; }
    [[nodiscard]] double dt() const noexcept { return dt_; }
    [[nodiscard]] const ProjectedForcing* forcing() const noexcept { return forcing_ ? &*forcing_ : nullptr; }

    /// Projects the initial data; throws PositivityLoss if rho or theta is not positive on a cell.
    [[nodiscard]] State init_state(const InitialData& data) const;

    /// Residuals of the scheme with every flux and operator evaluated at `k` and
    /// the time difference taken against `km1`.
    [[nodiscard]] Residual residual(const State& k, const State& km1) const;

    /// Max over the three equations of ||r||_inf / (1 + ||conserved field||_inf),
    /// the conserved fields being rho, rho u and c_v rho theta.
    [[nodiscard]] double residual_norm(const Residual& r, const State& k) const;

    /// One implicit step. Throws NonConvergence, PositivityLoss or LinearSolveFailure.
    [[nodiscard]] StepResult step(const State& previous);

private:
    struct Solvers;

    RunConfig config_;
    Mesh mesh_;
    FluxParams flux_;
    double dt_;
    std::optional<ProjectedForcing> forcing_;
    std::unique_ptr<Solvers> solvers_;
};

}  // namespace nsfv
