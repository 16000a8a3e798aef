#include "nsfv/diagnostics.hpp"

#include <cmath>
#include <vector>

#include "nsfv/operators.hpp"
#include "nsfv/reduce.hpp"
#include "nsfv/thermo.hpp"

namespace nsfv {

namespace {

double squared_jump(const CellVectorField& u, int d, Index k) {
    double s = 0.0;
    for (int i = 0; i < u.dim(); ++i) {
        const double j = jump(trace(u[i], d, k));
        s += j * j;
    }
    return s;
}

}  // namespace

double total_mass(const State& s) { return integrate_cells(s.rho); }

double kinetic_energy(const State& s) {
    CellField e(s.mesh());
    for (Index k = 0; k < s.mesh().cell_count(); ++k) {
        double u2 = 0.0;
        for (int i = 0; i < s.u.dim(); ++i) u2 += s.u[i][k] * s.u[i][k];
        e[k] = 0.5 * s.rho[k] * u2;
    }
    return integrate_cells(e);
}

double internal_energy(const State& s, const GasParams& gas) {
    return gas.c_v * integrate_cells(hadamard(s.rho, s.theta));
}

double total_energy(const State& s, const GasParams& gas) { return kinetic_energy(s) + internal_energy(s, gas); }

double total_entropy(const State& s, const GasParams& gas) { return integrate_cells(hadamard(s.rho, s.entropy(gas))); }

EnergyTerms energy_balance(const Scheme& scheme, const State& k, const State& km1) {
    const Mesh& mesh = scheme.mesh();
    const double dt = scheme.dt();
    const double heps = scheme.flux().diffusion();
    const FaceField ubar = face_normal_velocity(k.u);

    EnergyTerms t;
    t.time_derivative = (total_energy(k, scheme.gas()) - total_energy(km1, scheme.gas())) / dt;
    t.h_diffusion = heps * sum_faces(mesh, [&](FaceId f) {
        return avg(trace(k.rho, f.dir, f.cell)) * squared_jump(k.u, f.dir, f.cell);
    });
    CellField w(mesh);
    for (Index c = 0; c < mesh.cell_count(); ++c) {
        double du2 = 0.0;
        for (int i = 0; i < mesh.dim(); ++i) {
            const double du = (k.u[i][c] - km1.u[i][c]) / dt;
            du2 += du * du;
        }
        w[c] = km1.rho[c] * du2;
    }
    t.time_dissipation = 0.5 * dt * integrate_cells(w);
    t.upwind_dissipation = 0.5 * sum_faces(mesh, [&](FaceId f) {
        const Trace r = trace(k.rho, f.dir, f.cell);
        const double un = ubar[f];
        return upwind_value(r.in, r.out, un) * std::abs(un) * squared_jump(k.u, f.dir, f.cell);
    });
    t.residual = t.time_derivative + t.h_diffusion + t.time_dissipation + t.upwind_dissipation;
    return t;
}

EntropyBudget entropy_budget(const Scheme& scheme, const State& k, const State& km1) {
    k.check_positivity();
    km1.check_positivity();
    const Mesh& mesh = scheme.mesh();
    const GasParams& gas = scheme.gas();
    const double dt = scheme.dt();
    const double h = mesh.h();
    const double heps = scheme.flux().diffusion();
    const Index n = mesh.cell_count();
    const FaceField ubar = face_normal_velocity(k.u);
    const CellField p = k.pressure();

    // (d/drho, d/dp) of -rho s at each cell
    CellField drho(mesh);
    CellField dp(mesh);
    for (Index c = 0; c < n; ++c) {
        const auto [a, b] = neg_rho_s_derivatives(gas, k.rho[c], k.theta[c]);
        drho[c] = a;
        dp[c] = b;
    }

    EntropyBudget e;
    CellField cell_rho(mesh);
    CellField cell_theta(mesh);
    for (Index c = 0; c < n; ++c) {
        cell_rho[c] = bregman_remainder(Renormalization::rho_log_rho, km1.rho[c], k.rho[c]) / dt;
        cell_theta[c] =
            -gas.c_v * km1.rho[c] * bregman_remainder(Renormalization::log_theta, km1.theta[c], k.theta[c]) / dt;
    }
    e.d1_time_rho = integrate_cells(cell_rho);
    e.d1_time_theta = integrate_cells(cell_theta);

    // Face remainders are expanded about the downwind value and evaluated at the upwind one.
    e.d1_face_rho = sum_faces(mesh, [&](FaceId f) {
        const Trace r = trace(k.rho, f.dir, f.cell);
        const double un = ubar[f];
        if (un == 0.0) return 0.0;
        const bool from_in = un > 0.0;
        return std::abs(un) *
               bregman_remainder(Renormalization::rho_log_rho, from_in ? r.in : r.out, from_in ? r.out : r.in);
    });
    e.d1_face_theta = sum_faces(mesh, [&](FaceId f) {
        const Trace r = trace(k.rho, f.dir, f.cell);
        const Trace t = trace(k.theta, f.dir, f.cell);
        const double un = ubar[f];
        if (un == 0.0) return 0.0;
        const bool from_in = un > 0.0;
        return -gas.c_v * std::abs(un) * (from_in ? r.in : r.out) *
               bregman_remainder(Renormalization::log_theta, from_in ? t.in : t.out, from_in ? t.out : t.in);
    });
    e.d1 = e.d1_time_rho + e.d1_face_rho + e.d1_time_theta + e.d1_face_theta;

    e.d2 = heps * sum_faces(mesh, [&](FaceId f) {
        return jump(trace(k.rho, f.dir, f.cell)) * jump(trace(drho, f.dir, f.cell)) +
               jump(trace(p, f.dir, f.cell)) * jump(trace(dp, f.dir, f.cell));
    });

    e.d3 = FaceField(mesh);
    std::vector<double> abs_d3;
    abs_d3.reserve(static_cast<std::size_t>(mesh.face_count()));
    for (int d = 0; d < mesh.dim(); ++d) {
        for (Index c = 0; c < n; ++c) {
            const double v = heps * (jump(trace(k.rho, d, c)) * avg(trace(drho, d, c)) +
                                     jump(trace(p, d, c)) * avg(trace(dp, d, c)));
            e.d3(d, c) = v;
            abs_d3.push_back(std::abs(v));
        }
    }
    e.d3_l1 = mesh.dual_volume() * pairwise_sum(abs_d3);

    CellField inv_theta(mesh);
    for (Index c = 0; c < n; ++c) inv_theta[c] = 1.0 / k.theta[c];
    e.kappa_production = -gas.kappa / h * sum_faces(mesh, [&](FaceId f) {
        return jump(trace(k.theta, f.dir, f.cell)) * jump(trace(inv_theta, f.dir, f.cell));
    });
    const CellTensorField d_u = sym_grad(k.u);
    const CellField div_u = div_h(k.u);
    const CellField heating = 2.0 * gas.mu * double_dot(d_u, d_u) + gas.lambda * hadamard(div_u, div_u);
    e.viscous_production = integrate_cells(hadamard(heating, inv_theta));

    e.time_derivative = (total_entropy(k, gas) - total_entropy(km1, gas)) / dt;
    e.residual = e.time_derivative - e.kappa_production - e.viscous_production - (e.d1 + e.d2);
    return e;
}

Monitors apriori_monitors(const Scheme& scheme, const State& s) {
    const Mesh& mesh = scheme.mesh();
    const double heps = scheme.flux().diffusion();
    const FaceField ubar = face_normal_velocity(s.u);
    Monitors m;
    m.min_rho = s.rho.min();
    m.max_rho = s.rho.max();
    m.min_theta = s.theta.min();
    m.max_theta = s.theta.max();
    m.max_speed = s.u.max_norm();
    m.jump_u_heps = heps * sum_faces(mesh, [&](FaceId f) { return squared_jump(s.u, f.dir, f.cell); });
    m.upwind_jump_u = sum_faces(mesh, [&](FaceId f) {
        const Trace r = trace(s.rho, f.dir, f.cell);
        return upwind_value(r.in, r.out, ubar[f]) * std::abs(ubar[f]) * squared_jump(s.u, f.dir, f.cell);
    });
    m.upwind_jump_rho = sum_faces(mesh, [&](FaceId f) {
        const double j = jump(trace(s.rho, f.dir, f.cell));
        return std::abs(ubar[f]) * j * j;
    });
    const FaceField gt = grad_edge(s.theta);
    m.grad_theta_l2sq = dual_inner(gt, gt);
    const CellTensorField d_u = sym_grad(s.u);
    m.sym_grad_u_l2sq = integrate_cells(double_dot(d_u, d_u));
    CellField u6(mesh);
    for (Index c = 0; c < mesh.cell_count(); ++c) {
        double u2 = 0.0;
        for (int i = 0; i < mesh.dim(); ++i) u2 += s.u[i][c] * s.u[i][c];
        u6[c] = u2 * u2 * u2;
    }
    m.u_l6 = std::pow(integrate_cells(u6), 1.0 / 6.0);
    return m;
}

namespace {

void fill_integrals(DiagnosticsRecord& r, const State& s, const GasParams& gas) {
    r.step = s.step;
    r.time = s.time;
    r.mass = total_mass(s);
    r.kinetic_energy = kinetic_energy(s);
    r.internal_energy = internal_energy(s, gas);
    r.total_energy = r.kinetic_energy + r.internal_energy;
    r.total_entropy = total_entropy(s, gas);
}

}  // namespace

DiagnosticsRecord initial_record(const Scheme& scheme, const State& s) {
    DiagnosticsRecord r;
    fill_integrals(r, s, scheme.gas());
    r.monitors = apriori_monitors(scheme, s);
    return r;
}

DiagnosticsRecord step_record(const Scheme& scheme, const State& k, const State& km1, const StepReport& report) {
    DiagnosticsRecord r;
    fill_integrals(r, k, scheme.gas());
    r.energy = energy_balance(scheme, k, km1);
    const EntropyBudget e = entropy_budget(scheme, k, km1);
    r.entropy_production_bh = e.production();
    r.d1 = e.d1;
    r.d2 = e.d2;
    r.d3_l1 = e.d3_l1;
    r.entropy_residual = e.residual;
    r.kappa_production = e.kappa_production;
    r.viscous_production = e.viscous_production;
    r.monitors = apriori_monitors(scheme, k);
    r.picard_iterations = report.picard_iterations;
    r.solver_residual = report.final_residual_norm;
    r.wall_ms = 1e3 * report.wall_time;
    return r;
}

}  // namespace nsfv
