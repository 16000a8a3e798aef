#pragma once

#include <utility>

namespace nsfv {

/// Perfect-gas and transport coefficients.
struct GasParams {
    double c_v = 1.5;     // specific heat at constant volume
    double mu = 0.01;     // shear viscosity
    double lambda = 0.0;  // bulk-type viscosity
    double kappa = 0.01;  // heat conductivity

    [[nodiscard]] double gamma() const noexcept { return 1.0 / c_v + 1.0; }

    /// Throws InvalidArgument unless c_v, mu, kappa > 0 and lambda >= 0.
    void validate() const;
};

[[nodiscard]] double pressure(double rho, double theta);

/// s = c_v log(theta) - log(rho).
[[nodiscard]] double entropy(const GasParams& gas, double rho, double theta);

/// Same entropy written in (rho, p): log(p / rho^gamma) / (gamma - 1).
[[nodiscard]] double entropy_rho_p(const GasParams& gas, double rho, double p);

/// -rho s as a function of (rho, p); convex on the positive quadrant.
[[nodiscard]] double neg_rho_s(const GasParams& gas, double rho, double p);

/// Partial derivatives of -rho s with respect to rho and p:
/// (c_v + 1 - s, -c_v / theta).
[[nodiscard]] std::pair<double, double> neg_rho_s_derivatives(const GasParams& gas, double rho, double theta);

enum class Renormalization {
    rho_log_rho,  // B(r) = r log r, convex
    log_theta,    // chi(t) = log t, concave
};

[[nodiscard]] double renorm_value(Renormalization kind, double x);
[[nodiscard]] double renorm_derivative(Renormalization kind, double x);

/// Exact second-order Taylor remainder F(a) - F(b) - F'(b)(a - b), F chosen by `kind`.
/// Nonnegative for rho_log_rho, nonpositive for log_theta.
[[nodiscard]] double bregman_remainder(Renormalization kind, double a, double b);

}  // namespace nsfv
