#pragma once

#include <optional>
#include <vector>

#include "nsfv/config.hpp"
#include "nsfv/fields.hpp"

namespace nsfv {

/// Analytic initial data (rho_0, u_0, theta_0).
struct InitialData {
    ScalarFunction rho;
    std::vector<ScalarFunction> u;
    ScalarFunction theta;
};

/// Steady analytic sources added to the continuity, momentum and internal energy equations.
struct Forcing {
    ScalarFunction mass;
    std::vector<ScalarFunction> momentum;
    ScalarFunction energy;
};

/// Uniform state (rho, u, theta).
[[nodiscard]] InitialData constant_data(int dim, double rho, std::vector<double> u, double theta);

/// Smooth periodic data with O(0.3) density and O(0.2) temperature/velocity variations.
[[nodiscard]] InitialData smooth_data(int dim);

/// Exact steady manufactured solution (2D):
///   rho = 2 + 0.1 sin(2 pi x) sin(2 pi y), u = 0.1 (sin 2 pi y, sin 2 pi x), theta = 1 + 0.1 cos(2 pi x).
[[nodiscard]] InitialData mms_solution(const GasParams& gas);
/// Sources that make mms_solution an exact solution of the continuous system.
[[nodiscard]] Forcing mms_forcing(const GasParams& gas);

/// Resolve the config's `initial` / `forcing` names.
[[nodiscard]] InitialData initial_preset(const RunConfig& config);
[[nodiscard]] std::optional<Forcing> forcing_preset(const RunConfig& config);

}  // namespace nsfv
