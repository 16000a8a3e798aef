#include "nsfv/problems.hpp"

#include <cmath>
#include <numbers>

#include "nsfv/errors.hpp"

namespace nsfv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

#include "mms_generated.inc"

}  // namespace

InitialData constant_data(int dim, double rho, std::vector<double> u, double theta) {
    if (static_cast<int>(u.size()) != dim) throw InvalidArgument("constant_data: velocity size must equal dim");
    InitialData d;
    d.rho = [rho](const Point&) { return rho; };
    d.theta = [theta](const Point&) { return theta; };
    for (double ui : u) d.u.emplace_back([ui](const Point&) { return ui; });
    return d;
}

InitialData smooth_data(int dim) {
    InitialData d;
    d.rho = [dim](const Point& x) {
        double r = 1.0 + 0.3 * std::sin(kTwoPi * x[0]) * std::sin(kTwoPi * x[1]);
        if (dim == 3) r += 0.1 * std::sin(kTwoPi * x[2]);
        return r;
    };
    d.theta = [](const Point& x) { return 1.0 + 0.2 * std::cos(kTwoPi * x[0]) * std::cos(kTwoPi * x[1]); };
    d.u.emplace_back([](const Point& x) { return 0.2 * std::sin(kTwoPi * x[1]) + 0.1 * std::cos(kTwoPi * x[0]); });
    d.u.emplace_back([](const Point& x) { return 0.2 * std::sin(kTwoPi * x[0]) + 0.1 * std::cos(kTwoPi * x[1]); });
    if (dim == 3) d.u.emplace_back([](const Point& x) { return 0.1 * std::sin(kTwoPi * (x[0] + x[2])); });
    return d;
}

InitialData mms_solution(const GasParams& gas) {
    InitialData d;
    d.rho = [gas](const Point& x) { return mms_rho(x[0], x[1], gas); };
    d.u.emplace_back([gas](const Point& x) { return mms_u0(x[0], x[1], gas); });
    d.u.emplace_back([gas](const Point& x) { return mms_u1(x[0], x[1], gas); });
    d.theta = [gas](const Point& x) { return mms_theta(x[0], x[1], gas); };
    return d;
}

Forcing mms_forcing(const GasParams& gas) {
    Forcing f;
    f.mass = [gas](const Point& x) { return mms_source_mass(x[0], x[1], gas); };
    f.momentum.emplace_back([gas](const Point& x) { return mms_source_mom0(x[0], x[1], gas); });
    f.momentum.emplace_back([gas](const Point& x) { return mms_source_mom1(x[0], x[1], gas); });
    f.energy = [gas](const Point& x) { return mms_source_energy(x[0], x[1], gas); };
    return f;
}

InitialData initial_preset(const RunConfig& config) {
    if (config.initial == "constant") return constant_data(config.dim, 1.0, std::vector<double>(config.dim, 0.0), 1.0);
    if (config.initial == "smooth") return smooth_data(config.dim);
    if (config.initial == "mms") {
        if (config.dim != 2) throw ConfigError("initial 'mms' requires dim = 2");
        return mms_solution(config.gas);
    }
    throw ConfigError("unknown initial data '" + config.initial + "'");
}

std::optional<Forcing> forcing_preset(const RunConfig& config) {
    if (config.forcing == "none") return std::nullopt;
    if (config.forcing == "mms") {
        if (config.dim != 2) throw ConfigError("forcing 'mms' requires dim = 2");
        return mms_forcing(config.gas);
    }
    throw ConfigError("unknown forcing '" + config.forcing + "'");
}

}  // namespace nsfv
