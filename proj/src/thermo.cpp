#include "nsfv/thermo.hpp"

#include <cmath>
#include <string>

#include "nsfv/errors.hpp"

namespace nsfv {

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0)) throw PositivityLoss(std::string(what) + " must be positive, got " + std::to_string(x));
}

}  // namespace

void GasParams::validate() const {
    if (!(c_v > 0.0)) throw InvalidArgument("c_v must be positive");
    if (!(mu > 0.0)) throw InvalidArgument("mu must be positive");
    if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be nonnegative");
    if (!(kappa > 0.0)) throw InvalidArgument("kappa must be positive");
}

double pressure(double rho, double theta) {
    require_positive(rho, "density");
    require_positive(theta, "temperature");
    return rho * theta;
}

double entropy(const GasParams& gas, double rho, double theta) {
    require_positive(rho, "density");
    require_positive(theta, "temperature");
    return gas.c_v * std::log(theta) - std::log(rho);
}

double entropy_rho_p(const GasParams& gas, double rho, double p) {
    require_positive(rho, "density");
    require_positive(p, "pressure");
    const double g = gas.gamma();
    return std::log(p / std::pow(rho, g)) / (g - 1.0);
}

double neg_rho_s(const GasParams& gas, double rho, double p) { return -rho * entropy_rho_p(gas, rho, p); }

std::pair<double, double> neg_rho_s_derivatives(const GasParams& gas, double rho, double theta) {
    const double s = entropy(gas, rho, theta);
    return {gas.c_v + 1.0 - s, -gas.c_v / theta};
}

double renorm_value(Renormalization kind, double x) {
    require_positive(x, "renormalization argument");
    return kind == Renormalization::rho_log_rho ? x * std::log(x) : std::log(x);
}

double renorm_derivative(Renormalization kind, double x) {
    require_positive(x, "renormalization argument");
    return kind == Renormalization::rho_log_rho ? std::log(x) + 1.0 : 1.0 / x;
}

double bregman_remainder(Renormalization kind, double a, double b) {
    require_positive(a, "remainder argument");
    require_positive(b, "remainder expansion point");
    // With t = a/b - 1:
    //   rho_log_rho: b [(1+t) log(1+t) - t] = b Sum_{n>=2} (-1)^n t^n / (n(n-1))
    //   log_theta:   log(1+t) - t            = Sum_{n>=2} (-1)^{n+1} t^n / n
    // The series is used near t = 0, where the closed form cancels catastrophically.
    const double t = (a - b) / b;
    const bool convex = kind == Renormalization::rho_log_rho;
    if (std::abs(t) < 0.05) {
        double sum = 0.0;
        double tn = t * t;
        for (int n = 2; n < 40; ++n) {
            const double term = (convex ? tn / (n * (n - 1.0)) : tn / n) * ((n % 2 == 0) ? 1.0 : -1.0);
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
            tn *= t;
        }
        return convex ? b * sum : -sum;
    }
    const double l = std::log1p(t);
    return convex ? a * l - (a - b) : l - t;
}

}  // namespace nsfv
