#include <gtest/gtest.h>

#include <cmath>

#include "nsfv/diagnostics.hpp"
#include "nsfv/errors.hpp"
#include "nsfv/problems.hpp"
#include "nsfv/scheme.hpp"
#include "nsfv/verify.hpp"

using namespace nsfv;

namespace {

RunConfig small_config(Index n = 8) {
    RunConfig c;
    c.n = n;
    return c;
}

double max_abs(const Residual& r) {
    double m = std::max(r.mass.max_abs(), r.energy.max_abs());
    for (int i = 0; i < r.momentum.dim(); ++i) m = std::max(m, r.momentum[i].max_abs());
    return m;
}

}  // namespace

TEST(Scheme, InitStateConstant) {
    Scheme s(small_config());
    const State st = s.init_state(constant_data(2, 1.0, {0.0, 0.0}, 1.0));
    EXPECT_EQ(st.rho.min(), 1.0);
    EXPECT_EQ(st.rho.max(), 1.0);
    EXPECT_EQ(st.theta.min(), 1.0);
    EXPECT_EQ(st.u.max_norm(), 0.0);
    EXPECT_EQ(st.time, 0.0);
}

TEST(Scheme, InitStateRejectsNonpositiveTemperature) {
    Scheme s(small_config());
    EXPECT_THROW((void)s.init_state(constant_data(2, 1.0, {0.0, 0.0}, -1.0)), PositivityLoss);
}

TEST(Scheme, InitStateOfPositiveSineStaysPositive) {
    for (Index n : {2, 3, 8}) {
        Scheme s(small_config(n));
        InitialData d = constant_data(2, 1.0, {0.0, 0.0}, 1.0);
        d.rho = [](const Point& x) { return 1.0 + 0.5 * std::sin(2 * M_PI * x[0]); };
        EXPECT_GT(s.init_state(d).rho.min(), 0.49);
    }
}

TEST(Scheme, ConstantStateHasZeroResidual) {
    for (int dim : {2, 3}) {
        RunConfig c = small_config(4);
        c.dim = dim;
        Scheme s(c);
        State st = s.init_state(constant_data(dim, 1.3, std::vector<double>(static_cast<std::size_t>(dim), 0.0), 0.8));
        EXPECT_EQ(max_abs(s.residual(st, st)), 0.0);
    }
}

TEST(Scheme, UniformTranslationHasZeroResidual) {
    Scheme s(small_config());
    const State st = s.init_state(constant_data(2, 1.0, {0.2, -0.1}, 1.0));
    EXPECT_LE(max_abs(s.residual(st, st)), 1e-15);
}

TEST(Scheme, ConstantStateIsFixedPointInOneIteration) {
    Scheme s(small_config());
    const State st = s.init_state(constant_data(2, 1.0, {0.0, 0.0}, 1.0));
    const StepResult r = s.step(st);
    EXPECT_EQ(r.report.picard_iterations, 1);
    EXPECT_LE((r.state.rho - st.rho).max_abs(), 1e-14);
    EXPECT_LE((r.state.theta - st.theta).max_abs(), 1e-14);
    EXPECT_LE(r.state.u.max_norm(), 1e-14);
    EXPECT_DOUBLE_EQ(r.state.time, s.dt());
    EXPECT_EQ(r.state.step, 1);
}

TEST(Scheme, ResidualIsLocal) {
    // One perturbed density cell changes r_mass only there and at its 2 dim neighbours.
    Scheme s(small_config(4));
    const State base = random_state(s.mesh(), 3);
    State pert = base;
    const Index k = s.mesh().cell_at({1, 2, 0});
    pert.rho[k] += 0.1;
    const CellField dr = s.residual(pert, base).mass - s.residual(base, base).mass;
    std::vector<Index> stencil{k};
    for (int d = 0; d < 2; ++d)
        for (int side : {-1, 1}) stencil.push_back(s.mesh().neighbor(k, d, side));
    for (Index j = 0; j < s.mesh().cell_count(); ++j) {
        const bool inside = std::find(stencil.begin(), stencil.end(), j) != stencil.end();
        if (inside) EXPECT_NE(dr[j], 0.0) << j;
        else EXPECT_EQ(dr[j], 0.0) << j;
    }
}

TEST(Scheme, ConvergedStepSatisfiesResidualBound) {
    RunConfig c = small_config(8);
    Scheme s(c);
    const State st = s.init_state(smooth_data(2));
    const StepResult r = s.step(st);
    EXPECT_GT(r.report.picard_iterations, 1);
    EXPECT_LE(s.residual_norm(s.residual(r.state, st), r.state), c.solver.picard_tol);
    EXPECT_LE(r.report.final_residual_norm, c.solver.picard_tol);
}

TEST(Scheme, StepConservesMassAndDissipatesEnergy) {
    RunConfig c = small_config(16);
    Scheme s(c);
    State st = s.init_state(smooth_data(2));
    const double m0 = total_mass(st);
    for (int i = 0; i < 3; ++i) {
        const double e0 = total_energy(st, c.gas);
        st = s.step(st).state;
        EXPECT_LE(total_energy(st, c.gas), e0 + c.solver.picard_tol);
    }
    EXPECT_LE(std::abs(total_mass(st) - m0) / m0, 1e-12);
}

TEST(Scheme, DirectAndKrylovSolversAgree) {
    RunConfig a = small_config(8), b = small_config(8);
    a.solver.linear_solver = LinearSolverKind::direct;
    b.solver.linear_solver = LinearSolverKind::bicgstab;
    Scheme sa(a), sb(b);
    const State st = sa.init_state(smooth_data(2));
    const State ra = sa.step(st).state, rb = sb.step(st).state;
    EXPECT_LE((ra.rho - rb.rho).max_abs(), 1e-9);
    EXPECT_LE((ra.theta - rb.theta).max_abs(), 1e-9);
}

TEST(Scheme, NonConvergenceIsReported) {
    RunConfig c = small_config(8);
    c.solver.max_picard = 1;
    Scheme s(c);
    EXPECT_THROW((void)s.step(s.init_state(smooth_data(2))), NonConvergence);
}

TEST(Scheme, ThreeDimensionalStep) {
    RunConfig c = small_config(4);
    c.dim = 3;
    Scheme s(c);
    const State st = s.init_state(smooth_data(3));
    const StepResult r = s.step(st);
    EXPECT_LE(s.residual_norm(s.residual(r.state, st), r.state), c.solver.picard_tol);
    EXPECT_LE(std::abs(total_mass(r.state) - total_mass(st)) / total_mass(st), 1e-12);
}

TEST(Scheme, MmsForcingVanishesForExactSteadyState) {
    // The forcing balances the continuous operator, so the residual at the
    // projected exact solution is a truncation error that shrinks with h.
    std::vector<double> r;
    for (Index n : {16, 32}) {
        RunConfig c = small_config(n);
        c.initial = "mms";
        c.forcing = "mms";
        Scheme s(c, forcing_preset(c));
        const State st = s.init_state(initial_preset(c));
        r.push_back(s.residual(st, st).energy.max_abs());
    }
    EXPECT_LT(r[1], r[0]);
}

TEST(Scheme, ThreadCountValidation) {
    EXPECT_THROW(set_thread_count(0), InvalidArgument);
    EXPECT_NO_THROW(set_thread_count(1));
}
