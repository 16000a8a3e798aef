#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nsfv/errors.hpp"
#include "nsfv/thermo.hpp"

using namespace nsfv;

TEST(Thermo, Pressure) {
    EXPECT_DOUBLE_EQ(pressure(1.0, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(pressure(2.0, 3.0), 6.0);
    EXPECT_THROW((void)pressure(2.0, 0.0), PositivityLoss);
    EXPECT_THROW((void)pressure(-1.0, 1.0), PositivityLoss);
}

TEST(Thermo, Entropy) {
    const GasParams gas;
    EXPECT_DOUBLE_EQ(entropy(gas, 1.0, 1.0), 0.0);
    EXPECT_NEAR(entropy(gas, 2.0, 1.0), -0.693147, 1e-6);
    EXPECT_THROW((void)entropy(gas, 1.0, -1.0), PositivityLoss);
}

TEST(Thermo, EntropyInPressureVariables) {
    const GasParams gas;
    for (double rho : {0.3, 1.0, 2.5})
        for (double theta : {0.4, 1.0, 3.0})
            EXPECT_NEAR(entropy_rho_p(gas, rho, rho * theta), entropy(gas, rho, theta), 1e-13);
}

TEST(Thermo, DerivativesAtReferenceState) {
    const GasParams gas;
    const auto [drho, dp] = neg_rho_s_derivatives(gas, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(drho, gas.c_v + 1.0);
    EXPECT_DOUBLE_EQ(dp, -gas.c_v);
}

TEST(Thermo, DerivativesMatchFiniteDifferences) {
    GasParams gas;
    gas.c_v = 2.5;
    const double rho = 1.3, theta = 0.7, p = rho * theta, e = 1e-6;
    const auto [drho, dp] = neg_rho_s_derivatives(gas, rho, theta);
    EXPECT_NEAR((neg_rho_s(gas, rho + e, p) - neg_rho_s(gas, rho - e, p)) / (2 * e), drho, 1e-8);
    EXPECT_NEAR((neg_rho_s(gas, rho, p + e) - neg_rho_s(gas, rho, p - e)) / (2 * e), dp, 1e-8);
}

TEST(Thermo, NegRhoSIsConvex) {
    const GasParams gas;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> d(0.2, 4.0);
    const double e = 1e-4;
    for (int t = 0; t < 200; ++t) {
        const double r = d(rng), p = d(rng);
        const auto f = [&](double a, double b) { return neg_rho_s(gas, a, b); };
        const double frr = (f(r + e, p) - 2 * f(r, p) + f(r - e, p)) / (e * e);
        const double fpp = (f(r, p + e) - 2 * f(r, p) + f(r, p - e)) / (e * e);
        const double frp = (f(r + e, p + e) - f(r + e, p - e) - f(r - e, p + e) + f(r - e, p - e)) / (4 * e * e);
        const double tol = 1e-5 * (1.0 + std::abs(frr) + std::abs(fpp));
        EXPECT_GE(frr, -tol);
        EXPECT_GE(fpp, -tol);
        EXPECT_GE(frr * fpp - frp * frp, -tol * (std::abs(frr) + std::abs(fpp)));
    }
}

TEST(Thermo, BregmanHandValues) {
    EXPECT_DOUBLE_EQ(bregman_remainder(Renormalization::rho_log_rho, 1.0, 1.0), 0.0);
    EXPECT_NEAR(bregman_remainder(Renormalization::rho_log_rho, std::exp(1.0), 1.0), 1.0, 1e-15);
    EXPECT_NEAR(bregman_remainder(Renormalization::log_theta, 2.0, 1.0), -0.306853, 1e-6);
}

TEST(Thermo, BregmanSigns) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(1e-3, 10.0);
    for (int t = 0; t < 1000; ++t) {
        const double a = d(rng), b = d(rng);
        EXPECT_GE(bregman_remainder(Renormalization::rho_log_rho, a, b), 0.0);
        EXPECT_LE(bregman_remainder(Renormalization::log_theta, a, b), 0.0);
    }
}

TEST(Thermo, BregmanMatchesDefinition) {
    for (auto kind : {Renormalization::rho_log_rho, Renormalization::log_theta}) {
        const double a = 1.7, b = 0.6;
        const double def = renorm_value(kind, a) - renorm_value(kind, b) - renorm_derivative(kind, b) * (a - b);
        EXPECT_NEAR(bregman_remainder(kind, a, b), def, 1e-14);
    }
}

TEST(Thermo, BregmanNearlyEqualArgumentsIsQuadratic) {
    const double b = 1.3, d = 1e-7;
    EXPECT_NEAR(bregman_remainder(Renormalization::rho_log_rho, b + d, b), d * d / (2 * b), 1e-6 * d * d);
    EXPECT_NEAR(bregman_remainder(Renormalization::log_theta, b + d, b), -d * d / (2 * b * b), 1e-6 * d * d);
}

TEST(Thermo, GasValidation) {
    GasParams gas;
    EXPECT_NO_THROW(gas.validate());
    EXPECT_DOUBLE_EQ(gas.gamma(), 1.0 / 1.5 + 1.0);
    gas.lambda = -0.1;
    EXPECT_THROW(gas.validate(), InvalidArgument);
}
