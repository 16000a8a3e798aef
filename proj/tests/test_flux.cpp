#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nsfv/errors.hpp"
#include "nsfv/flux.hpp"
#include "nsfv/operators.hpp"

using namespace nsfv;

TEST(Flux, UpwindHandValues) {
    EXPECT_DOUBLE_EQ(upwind(5.0, 1.0, 2.0), 10.0);
    EXPECT_DOUBLE_EQ(upwind(5.0, 1.0, -2.0), -2.0);
    EXPECT_DOUBLE_EQ(upwind(5.0, 1.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(upwind_value(5.0, 1.0, 2.0), 5.0);
    EXPECT_DOUBLE_EQ(upwind_value(5.0, 1.0, -2.0), 1.0);
}

TEST(Flux, UpwindEqualsCentralMinusDissipation) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int t = 0; t < 100; ++t) {
        const double a = d(rng), b = d(rng), u = d(rng);
        EXPECT_NEAR(upwind(a, b, u), 0.5 * (a + b) * u - 0.5 * std::abs(u) * (b - a), 1e-14);
    }
    EXPECT_DOUBLE_EQ(0.5 * (5.0 + 1.0) * 2.0 - 0.5 * 2.0 * (1.0 - 5.0), 10.0);
}

TEST(Flux, DiffusiveFluxHandValue) {
    const FluxParams p(0.5, 0.1);
    EXPECT_NEAR(diffusive_flux(5.0, 1.0, 2.0, p), 11.264911, 1e-6);
    EXPECT_DOUBLE_EQ(diffusive_flux(3.0, 3.0, -0.7, p), 3.0 * -0.7);
}

TEST(Flux, ParameterValidation) {
    EXPECT_THROW(FluxParams(1.0, 0.1), InvalidArgument);
    EXPECT_THROW(FluxParams(0.0, 0.1), InvalidArgument);
    EXPECT_THROW(FluxParams(0.5, 0.0), InvalidArgument);
    EXPECT_DOUBLE_EQ(FluxParams(0.6, 0.25).diffusion(), std::pow(0.25, 0.6));
}

TEST(Flux, VectorFluxComponentwise) {
    const FluxParams p(0.6, 0.125);
    const std::vector<double> a{1.0, -2.0}, b{0.5, 3.0};
    const auto f = vector_flux(a, b, 0.0, p);
    EXPECT_DOUBLE_EQ(f[0], -p.diffusion() * (0.5 - 1.0));
    EXPECT_DOUBLE_EQ(f[1], -p.diffusion() * (3.0 + 2.0));
    const auto c = vector_flux(std::vector<double>{2.0, 4.0}, std::vector<double>{2.0, 4.0}, 0.3, p);
    EXPECT_DOUBLE_EQ(c[0], 0.6);
    EXPECT_DOUBLE_EQ(c[1], 1.2);
}

TEST(Flux, ZeroVelocityFluxIsPureDiffusion) {
    // Sum of the jump part over a cell's faces is -h^{eps+1} Laplacian.
    const Mesh m(2, 8);
    const FluxParams p(0.6, m.h());
    CellField r(m);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (Index k = 0; k < m.cell_count(); ++k) r[k] = d(rng);
    const FaceField ubar = face_normal_velocity(CellVectorField(m, 0.0));
    const FaceField F = flux_field(r, ubar, p);
    const CellField divF = div_dual(F);
    const CellField L = laplace_h(r);
    for (Index k = 0; k < m.cell_count(); ++k)
        EXPECT_NEAR(divF[k], -p.diffusion() * m.h() * L[k], 1e-12);
}

TEST(Flux, ConstantStateFlux) {
    const Mesh m(2, 4);
    const FluxParams p(0.6, m.h());
    CellVectorField u(m);
    for (Index k = 0; k < m.cell_count(); ++k) {
        u[0][k] = 0.3;
        u[1][k] = -0.2;
    }
    const FaceField ubar = face_normal_velocity(u);
    const FaceField F = flux_field(CellField(m, 2.0), ubar, p);
    for (Index k = 0; k < m.cell_count(); ++k) {
        EXPECT_DOUBLE_EQ(F(0, k), 0.6);
        EXPECT_DOUBLE_EQ(F(1, k), -0.4);
    }
    const FaceField up = upwind_field(CellField(m, 2.0), ubar);
    EXPECT_DOUBLE_EQ(up(0, 3), 0.6);
}

TEST(Flux, MonotoneInUpwindValue) {
    // Increasing in r_in, nonincreasing in r_out.
    const FluxParams p(0.6, 0.05);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int t = 0; t < 200; ++t) {
        const double a = d(rng), b = d(rng), u = d(rng), e = 1e-3;
        EXPECT_GT(diffusive_flux(a + e, b, u, p), diffusive_flux(a, b, u, p));
        EXPECT_LT(diffusive_flux(a, b + e, u, p), diffusive_flux(a, b, u, p));
    }
}

TEST(Flux, FluxFieldMatchesPointwiseFlux) {
    const Mesh m(3, 3);
    const FluxParams p(0.4, m.h());
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    CellField r(m);
    CellVectorField u(m);
    for (Index k = 0; k < m.cell_count(); ++k) {
        r[k] = d(rng);
        for (int i = 0; i < 3; ++i) u[i][k] = d(rng);
    }
    const FaceField ubar = face_normal_velocity(u);
    const FaceField F = flux_field(r, ubar, p);
    for (int dir = 0; dir < 3; ++dir)
        for (Index k = 0; k < m.cell_count(); ++k) {
            const Index l = m.neighbor(k, dir, +1);
            const double un = 0.5 * (u[dir][k] + u[dir][l]);
            EXPECT_DOUBLE_EQ(ubar(dir, k), un);
            EXPECT_NEAR(F(dir, k), diffusive_flux(r[k], r[l], un, p), 1e-15);
        }
}
