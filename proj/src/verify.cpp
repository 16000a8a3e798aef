#include "nsfv/verify.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <random>

#include "nsfv/diagnostics.hpp"
#include "nsfv/errors.hpp"
#include "nsfv/operators.hpp"
#include "nsfv/problems.hpp"
#include "nsfv/reduce.hpp"
#include "nsfv/run.hpp"
#include "nsfv/thermo.hpp"

namespace nsfv {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

CellField random_field(const Mesh& mesh, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    CellField f(mesh);
    for (Index k = 0; k < mesh.cell_count(); ++k) f[k] = dist(rng);
    return f;
}

CellVectorField random_vector(const Mesh& mesh, std::mt19937_64& rng, double lo, double hi) {
    CellVectorField v(mesh);
    for (int i = 0; i < mesh.dim(); ++i) v[i] = random_field(mesh, rng, lo, hi);
    return v;
}

CellField abs_field(CellField f) {
    for (Index k = 0; k < f.mesh().cell_count(); ++k) f[k] = std::abs(f[k]);
    return f;
}

double abs_integral(const CellField& f) { return integrate_cells(abs_field(f)); }

double dot_integral(const CellVectorField& a, const CellVectorField& b, double* magnitude = nullptr) {
    double s = 0.0;
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        const CellField p = hadamard(a[i], b[i]);
        s += integrate_cells(p);
        m += abs_integral(p);
    }
    if (magnitude) *magnitude = m;
    return s;
}

double relative(double defect, double magnitude) { return std::abs(defect) / std::max(magnitude, kTiny); }

State make_state(CellField rho, CellVectorField u, CellField theta) {
    return State{std::move(rho), std::move(u), std::move(theta), 0.0, 0};
}

RunConfig battery_config(int dim, Index n) {
    RunConfig c;
    c.dim = dim;
    c.n = n;
    c.gas.lambda = 0.005;
    c.output.diagnostics_file.clear();
    return c;
}

/// Sum over faces of |sigma| |ubar| phi^down R_b(r^up; r^down).
double face_remainder(const Mesh& mesh, const FaceField& ubar, const CellField* weight,
                      const CellField& phi, Renormalization kind, const CellField& arg) {
    return sum_faces(mesh, [&](FaceId f) {
        const double un = ubar[f];
        if (un == 0.0) return 0.0;
        const Index in = f.cell;
        const Index out = mesh.neighbor(f.cell, f.dir, +1);
        const Index up = un > 0.0 ? in : out;
        const Index down = un > 0.0 ? out : in;
        const double w = weight ? (*weight)[up] : 1.0;
        return std::abs(un) * w * phi[down] * bregman_remainder(kind, arg[up], arg[down]);
    });
}

}  // namespace

double RenormalizedCheck::identity_error() const { return relative(lhs - tested_residual, scale); }

State random_state(const Mesh& mesh, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CellField rho = random_field(mesh, rng, 0.5, 1.5);
    CellVectorField u = random_vector(mesh, rng, -0.5, 0.5);
    CellField theta = random_field(mesh, rng, 0.5, 1.5);
    return make_state(std::move(rho), std::move(u), std::move(theta));
}

CellField random_test_function(const Mesh& mesh, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_field(mesh, rng, -1.0, 1.0);
}

double convective_form_error(const Scheme& scheme, const State& k, const State& km1) {
    const Mesh& mesh = scheme.mesh();
    const int dim = mesh.dim();
    const double dt = scheme.dt();
    const double h = mesh.h();
    const double heps = scheme.flux().diffusion();
    const GasParams& gas = scheme.gas();
    const Residual r = scheme.residual(k, km1);
    const FaceField ubar = face_normal_velocity(k.u);
    const CellVectorField grad_p = grad_h(k.pressure());
    const CellVectorField div_d = div_h(sym_grad(k.u));
    const CellVectorField grad_div = grad_h(div_h(k.u));
    const ProjectedForcing* g = scheme.forcing();

    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (Index c = 0; c < mesh.cell_count(); ++c) {
            const double time = km1.rho[c] * (k.u[i][c] - km1.u[i][c]) / dt;
            double conv = 0.0;
            double magnitude = std::abs(time);
            for (int d = 0; d < dim; ++d) {
                for (int side : {+1, -1}) {
                    const Index l = mesh.neighbor(c, d, side);
                    const double u_out = side > 0 ? ubar(d, c) : -ubar(d, l);
                    const Index up = u_out >= 0.0 ? c : l;
                    const double t = k.rho[up] * u_out * (k.u[i][up] - k.u[i][c]) -
                                     heps * k.rho[l] * (k.u[i][l] - k.u[i][c]);
                    conv += t / h;
                    magnitude += std::abs(t / h);
                }
            }
            const double visc = 2.0 * gas.mu * div_d[i][c] + gas.lambda * grad_div[i][c];
            double convective = time + conv + grad_p[i][c] - visc;
            magnitude += std::abs(grad_p[i][c]) + std::abs(visc);
            if (g) {
                convective -= g->momentum[i][c] - k.u[i][c] * g->mass[c];
                magnitude += std::abs(g->momentum[i][c]) + std::abs(k.u[i][c] * g->mass[c]);
            }
            const double conservative = r.momentum[i][c] - k.u[i][c] * r.mass[c];
            worst = std::max(worst, relative(conservative - convective, magnitude));
        }
    }
    return worst;
}

RenormalizedCheck renormalized_continuity(const Scheme& scheme, const State& k, const State& km1,
                                          const CellField& phi) {
    constexpr Renormalization kind = Renormalization::rho_log_rho;
    const Mesh& mesh = scheme.mesh();
    const Index n = mesh.cell_count();
    const double dt = scheme.dt();
    const double heps = scheme.flux().diffusion();
    const FaceField ubar = face_normal_velocity(k.u);
    const CellField div_u = div_h(k.u);
    const Residual r = scheme.residual(k, km1);

    CellField b(mesh), b_old(mesh), db(mesh), rem(mesh), pb(mesh), phi_db(mesh);
    for (Index c = 0; c < n; ++c) {
        b[c] = renorm_value(kind, k.rho[c]);
        b_old[c] = renorm_value(kind, km1.rho[c]);
        db[c] = renorm_derivative(kind, k.rho[c]);
        rem[c] = bregman_remainder(kind, km1.rho[c], k.rho[c]);
        pb[c] = k.rho[c] * db[c] - b[c];
        phi_db[c] = phi[c] * db[c];
    }

    RenormalizedCheck check;
    check.lhs = integrate_cells(hadamard(phi, b - b_old)) / dt + integrate_cells(hadamard(phi, rem)) / dt -
                sum_faces(mesh, [&](FaceId f) {
                    const Trace t = trace(b, f.dir, f.cell);
                    return ubar[f] * upwind_value(t.in, t.out, ubar[f]) * jump(trace(phi, f.dir, f.cell));
                }) +
                integrate_cells(hadamard(phi, hadamard(pb, div_u))) +
                face_remainder(mesh, ubar, nullptr, phi, kind, k.rho) +
                heps * sum_faces(mesh, [&](FaceId f) {
                    return jump(trace(k.rho, f.dir, f.cell)) * jump(trace(phi_db, f.dir, f.cell));
                });
    check.tested_residual = integrate_cells(hadamard(phi_db, r.mass));
    check.scale = phi.max_abs() * db.max_abs() * (1.0 + k.rho.max_abs()) * mesh.cell_volume() *
                  static_cast<double>(n);
    return check;
}

RenormalizedCheck renormalized_energy(const Scheme& scheme, const State& k, const State& km1,
                                      const CellField& phi) {
    constexpr Renormalization kind = Renormalization::log_theta;
    const Mesh& mesh = scheme.mesh();
    const Index n = mesh.cell_count();
    const double dt = scheme.dt();
    const double h = mesh.h();
    const double heps = scheme.flux().diffusion();
    const GasParams& gas = scheme.gas();
    const FaceField ubar = face_normal_velocity(k.u);
    const CellField div_u = div_h(k.u);
    const CellTensorField d_u = sym_grad(k.u);
    const CellField heating = 2.0 * gas.mu * double_dot(d_u, d_u) + gas.lambda * hadamard(div_u, div_u);
    const Residual r = scheme.residual(k, km1);
    const CellField rt = hadamard(k.rho, k.theta);

    CellField rlog(mesh), rlog_old(mesh), logt(mesh), rem(mesh), phi_t(mesh), phi_lin(mesh);
    for (Index c = 0; c < n; ++c) {
        logt[c] = std::log(k.theta[c]);
        rlog[c] = k.rho[c] * logt[c];
        rlog_old[c] = km1.rho[c] * std::log(km1.theta[c]);
        rem[c] = km1.rho[c] * bregman_remainder(kind, km1.theta[c], k.theta[c]);
        phi_t[c] = phi[c] / k.theta[c];
        phi_lin[c] = phi[c] * (1.0 - logt[c]);
    }

    RenormalizedCheck check;
    const double time = gas.c_v * (integrate_cells(hadamard(phi, rlog - rlog_old)) + integrate_cells(hadamard(phi, rem))) / dt;
    const double convection = -gas.c_v * sum_faces(mesh, [&](FaceId f) {
        const double un = ubar[f];
        const Trace rr = trace(k.rho, f.dir, f.cell);
        const Trace lt = trace(logt, f.dir, f.cell);
        return un * upwind_value(rr.in, rr.out, un) * upwind_value(lt.in, lt.out, un) *
               jump(trace(phi, f.dir, f.cell));
    });
    const double remainder = gas.c_v * face_remainder(mesh, ubar, &k.rho, phi, kind, k.theta);
    const double diffusion = gas.c_v * heps * sum_faces(mesh, [&](FaceId f) {
        return jump(trace(rt, f.dir, f.cell)) * jump(trace(phi_t, f.dir, f.cell)) -
               jump(trace(k.rho, f.dir, f.cell)) * jump(trace(phi_lin, f.dir, f.cell));
    });
    const double conduction = gas.kappa / h * sum_faces(mesh, [&](FaceId f) {
        return jump(trace(k.theta, f.dir, f.cell)) * jump(trace(phi_t, f.dir, f.cell));
    });
    const double sources = -integrate_cells(hadamard(phi_t, heating)) +
                           integrate_cells(hadamard(phi, hadamard(k.rho, div_u)));
    check.lhs = time + convection + remainder + diffusion + conduction + sources;
    check.tested_residual =
        integrate_cells(hadamard(phi_t, r.energy)) - gas.c_v * integrate_cells(hadamard(phi_lin, r.mass));
    const double volume = mesh.cell_volume() * static_cast<double>(n);
    check.scale = (phi_t.max_abs() * (1.0 + gas.c_v * rt.max_abs()) +
                   gas.c_v * phi_lin.max_abs() * (1.0 + k.rho.max_abs())) *
                  volume;
    return check;
}

namespace {

class IdentityLog {
public:
    void record(const std::string& name, double err) {
        auto [it, fresh] = slot_.emplace(name, results_.size());
        if (fresh) results_.push_back({name, 0.0, 0});
        IdentityResult& r = results_[it->second];
        r.max_relative_error = std::max(r.max_relative_error, err);
        ++r.trials;
    }
    [[nodiscard]] std::vector<IdentityResult> take() { return std::move(results_); }

private:
    std::vector<IdentityResult> results_;
    std::map<std::string, std::size_t> slot_;
};

}  // namespace

std::vector<IdentityResult> check_identities(int dim, Index n, int trials, std::uint64_t seed) {
    const Mesh mesh(dim, n);
    const Index cells = mesh.cell_count();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    IdentityLog log;

    for (int t = 0; t < trials; ++t) {
        const CellField r = random_field(mesh, rng, -1.0, 1.0);
        const CellField q = random_field(mesh, rng, -1.0, 1.0);
        const CellVectorField v = random_vector(mesh, rng, -1.0, 1.0);
        FaceField w(mesh);
        for (int d = 0; d < dim; ++d) {
            for (Index c = 0; c < cells; ++c) w(d, c) = unit(rng);
        }

        {
            double e_avg = 0.0;
            double e_prod = 0.0;
            for (int d = 0; d < dim; ++d) {
                mesh.for_each_stencil(d, [&](Index c, Index, Index up) {
                    const Trace a{r[c], r[up]};
                    const Trace b{q[c], q[up]};
                    const Trace ab{a.in * b.in, a.out * b.out};
                    const double quarter = 0.25 * jump(a) * jump(b);
                    e_avg = std::max(e_avg, relative(avg(ab) - avg(a) * avg(b) - quarter,
                                                     std::abs(avg(ab)) + std::abs(avg(a) * avg(b)) + std::abs(quarter)));
                    const double x = avg(a) * jump(b);
                    const double y = jump(a) * avg(b);
                    e_prod = std::max(e_prod, relative(jump(ab) - x - y, std::abs(jump(ab)) + std::abs(x) + std::abs(y)));
                });
            }
            log.record("avg(uv) - avg(u) avg(v) = jump(u) jump(v) / 4", e_avg);
            log.record("product rule jump(uv) = avg(u) jump(v) + jump(u) avg(v)", e_prod);
        }
        {
            std::vector<double> terms;
            terms.reserve(static_cast<std::size_t>(mesh.face_count()));
            double m = 0.0;
            for (int d = 0; d < dim; ++d) {
                mesh.for_each_stencil(d, [&](Index c, Index, Index up) {
                    const double x = 0.5 * (r[c] + r[up]) * (v[d][up] - v[d][c]);
                    const double y = 0.5 * (v[d][c] + v[d][up]) * (r[up] - r[c]);
                    m += std::abs(x) + std::abs(y);
                    terms.push_back(x + y);
                });
            }
            const double s = mesh.face_area() * pairwise_sum(terms);
            m *= mesh.face_area();
            log.record("face sum of avg(r) jump(v).n + avg(v).n jump(r) vanishes", relative(s, m));
        }
        {
            const CellField a = hadamard(r, div_h(v));
            double m = 0.0;
            const double b = dot_integral(grad_h(r), v, &m);
            log.record("grad-div duality", relative(integrate_cells(a) + b, abs_integral(a) + m));
        }
        {
            const FaceField gr = grad_edge(r);
            const FaceField gq = grad_edge(q);
            const CellField a = hadamard(laplace_h(r), q);
            const CellField b = hadamard(r, laplace_h(q));
            FaceField prod(mesh);
            for (int d = 0; d < dim; ++d) {
                for (Index c = 0; c < cells; ++c) prod(d, c) = std::abs(gr(d, c) * gq(d, c));
            }
            const double ia = integrate_cells(a);
            log.record("Laplacian integration by parts",
                       std::max(relative(ia + dual_inner(gr, gq), abs_integral(a) + integrate_dual(prod)),
                                relative(ia - integrate_cells(b), abs_integral(a) + abs_integral(b))));
        }
        {
            const FaceField gr = grad_edge(r);
            double err = 0.0;
            for (int d = 0; d < dim; ++d) {
                FaceField wd(mesh);
                FaceField prod(mesh);
                for (Index c = 0; c < cells; ++c) {
                    wd(d, c) = w(d, c) * gr(d, c);
                    prod(d, c) = std::abs(wd(d, c));
                }
                const CellField b = hadamard(r, dual_diff(w, d));
                err = std::max(err, relative(integrate_dual(wd) + integrate_cells(b),
                                             integrate_dual(prod) + abs_integral(b)));
            }
            log.record("edge derivative integration by parts", err);
        }
        {
            const CellVectorField g = grad_h(r);
            const FaceField avg_r = project_face(r);
            const FaceField gr = grad_edge(r);
            const CellField lap = laplace_h(r);
            const CellField fact = div_dual(gr);
            const double inv_h = 1.0 / mesh.h();
            double e_grad = 0.0;
            double e_lap = 0.0;
            for (int d = 0; d < dim; ++d) {
                const CellField a = dual_diff(avg_r, d);
                const CellField b = project_cell(gr, d);
                mesh.for_each_stencil(d, [&](Index c, Index lo, Index up) {
                    const double m = inv_h * (std::abs(r[up]) + 2.0 * std::abs(r[c]) + std::abs(r[lo]));
                    e_grad = std::max({e_grad, relative(a[c] - b[c], m), relative(g[d][c] - b[c], m)});
                });
            }
            CellField lap_scale(mesh, 0.0);
            for (int d = 0; d < dim; ++d) {
                mesh.for_each_stencil(d, [&](Index c, Index lo, Index up) {
                    lap_scale[c] += std::abs(r[up]) + std::abs(r[lo]) + 2.0 * std::abs(r[c]);
                });
            }
            for (Index c = 0; c < cells; ++c) {
                e_lap = std::max(e_lap, relative(lap[c] - fact[c], lap_scale[c] * inv_h * inv_h));
            }
            log.record("grad_h = dual difference of face average = cell average of edge gradient", e_grad);
            log.record("Laplacian = dual divergence of edge gradient", e_lap);
        }
        {
            const CellTensorField dv = sym_grad(v);
            const CellTensorField gv = grad_h(v);
            const CellField tr = trace(dv);
            const CellField div = div_h(v);
            double err = 0.0;
            for (Index c = 0; c < cells; ++c) {
                double m = 0.0;
                for (int i = 0; i < dim; ++i) m += std::abs(gv(i, i)[c]);
                err = std::max(err, relative(tr[c] - div[c], m));
            }
            log.record("trace of symmetric gradient = div_h", err);
        }
    }
    return log.take();
}

double check_convective_reformulation(const Mesh& mesh, const FluxParams& flux, const ScalarFunction& phi,
                                      const std::vector<ScalarFunction>& grad_phi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int dim = mesh.dim();
    const CellField r = random_field(mesh, rng, 0.5, 1.5);
    const CellVectorField v = random_vector(mesh, rng, -1.0, 1.0);
    const CellField p = project_cell(mesh, phi);
    const CellVectorField dphi = project_cell(mesh, grad_phi);
    const CellVectorField gp = grad_h(p);
    const FaceField ubar = face_normal_velocity(v);
    const FaceField f = flux_field(r, ubar, flux);

    double m1 = 0.0;
    double m2 = 0.0;
    CellVectorField rv(mesh);
    CellVectorField diff(mesh);
    for (int i = 0; i < dim; ++i) {
        rv[i] = hadamard(r, v[i]);
        diff[i] = dphi[i] - gp[i];
    }
    const double lhs1 = dot_integral(rv, dphi, &m1);
    const double consistency = dot_integral(rv, diff, &m2);
    double m = m1 + m2;
    const double lhs2 = sum_faces(mesh, [&](FaceId s) {
        const double x = f[s] * jump(trace(p, s.dir, s.cell));
        m += mesh.face_area() * std::abs(x);
        return x;
    });
    const double rhs1 = sum_faces(mesh, [&](FaceId s) {
        const double jv = jump(trace(v[s.dir], s.dir, s.cell));
        const double x = (0.5 * std::abs(ubar[s]) + flux.diffusion() + 0.25 * jv) *
                         jump(trace(r, s.dir, s.cell)) * jump(trace(p, s.dir, s.cell));
        m += mesh.face_area() * std::abs(x);
        return x;
    });
    return relative((lhs1 - lhs2) - (rhs1 + consistency), m);
}

std::vector<IdentityResult> check_scheme_identities(int dim, Index n, int trials, std::uint64_t seed) {
    const Mesh mesh(dim, n);
    const Scheme scheme(battery_config(dim, n));
    std::mt19937_64 rng(seed);
    IdentityLog log;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s1 = rng();
        const std::uint64_t s2 = rng();
        const State k = random_state(mesh, s1);
        const State km1 = random_state(mesh, s2);
        log.record("convective form of the momentum residual", convective_form_error(scheme, k, km1));
        const CellField phi = random_test_function(mesh, rng());
        log.record("renormalized continuity identity", renormalized_continuity(scheme, k, km1, phi).identity_error());
        log.record("renormalized energy identity", renormalized_energy(scheme, k, km1, phi).identity_error());

        const Residual res = scheme.residual(k, km1);
        const EnergyTerms e = energy_balance(scheme, k, km1);
        double tested = integrate_cells(res.energy);
        double magnitude = abs_integral(res.energy);
        CellField half_u2(mesh);
        for (int i = 0; i < dim; ++i) {
            const CellField p = hadamard(k.u[i], res.momentum[i]);
            tested += integrate_cells(p);
            magnitude += abs_integral(p);
            half_u2 += 0.5 * hadamard(k.u[i], k.u[i]);
        }
        const CellField p = hadamard(half_u2, res.mass);
        tested -= integrate_cells(p);
        magnitude += abs_integral(p);
        magnitude += std::abs(e.time_derivative) + e.h_diffusion + e.time_dissipation + e.upwind_dissipation;
        log.record("total energy balance identity", relative(e.residual - tested, magnitude));

        const EntropyBudget s = entropy_budget(scheme, k, km1);
        const CellField one(mesh, 1.0);
        const RenormalizedCheck ce = renormalized_continuity(scheme, k, km1, one);
        const RenormalizedCheck ee = renormalized_energy(scheme, k, km1, one);
        const double tested_s = ee.tested_residual - ce.tested_residual;
        const double mag = std::abs(s.time_derivative) + s.d1_time_rho + s.d1_face_rho - s.d1_time_theta -
                           s.d1_face_theta + std::abs(s.d2) + s.kappa_production + s.viscous_production +
                           std::abs(ee.tested_residual) + std::abs(ce.tested_residual);
        log.record("entropy balance identity", relative(s.residual - tested_s, mag));
    }
    return log.take();
}

CellField restrict_to(const CellField& fine, const Mesh& coarse) {
    const Mesh& fm = fine.mesh();
    if (fm.dim() != coarse.dim() || fm.cells_per_dim() % coarse.cells_per_dim() != 0) {
        throw InvalidArgument("fine grid is not a refinement of the coarse grid");
    }
    const Index ratio = fm.cells_per_dim() / coarse.cells_per_dim();
    CellField out(coarse);
    const Index children = coarse.dim() == 3 ? ratio * ratio * ratio : ratio * ratio;
    for (Index c = 0; c < fm.cell_count(); ++c) {
        CellCoord fc = fm.coord(c);
        CellCoord cc = fc;
        for (int d = 0; d < fm.dim(); ++d) cc[static_cast<std::size_t>(d)] = fc[static_cast<std::size_t>(d)] / ratio;
        out[coarse.cell_at(cc)] += fine[c];
    }
    out *= 1.0 / static_cast<double>(children);
    return out;
}

namespace {

State run_on(const RunConfig& base, Index n) {
    RunConfig c = base;
    c.n = n;
    return run(c).final_state;
}

struct Errors {
    double rho, u, theta;
};

Errors difference(const State& coarse, const State& other) {
    const Mesh& mesh = coarse.mesh();
    const CellField r = restrict_to(other.rho, mesh);
    const CellField t = restrict_to(other.theta, mesh);
    CellVectorField du(mesh);
    for (int i = 0; i < mesh.dim(); ++i) du[i] = coarse.u[i] - restrict_to(other.u[i], mesh);
    return {l2_norm(coarse.rho - r), l2_norm(du), l2_norm(coarse.theta - t)};
}

Errors exact_error(const State& s, const InitialData& exact) {
    const Mesh& mesh = s.mesh();
    CellVectorField du(mesh);
    const CellVectorField ue = project_cell(mesh, exact.u);
    for (int i = 0; i < mesh.dim(); ++i) du[i] = s.u[i] - ue[i];
    return {l2_norm(s.rho - project_cell(mesh, exact.rho)), l2_norm(du),
            l2_norm(s.theta - project_cell(mesh, exact.theta))};
}

double order(double e0, double e1, Index n0, Index n1) {
    return std::log(e0 / e1) / std::log(static_cast<double>(n1) / static_cast<double>(n0));
}

}  // namespace

StudyResult convergence_study(const RunConfig& config) {
    config.validate();
    StudyResult study;
    study.mode = config.study.mode;
    const auto& grids = config.study.grids;
    if (grids.empty()) throw ConfigError("grids must list at least one resolution");

    std::map<Index, State> cache;
    const auto solution = [&](Index n) -> const State& {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, run_on(config, n)).first;
        return it->second;
    };

    for (Index n : grids) {
        Errors e{};
        switch (config.study.mode) {
            case StudyMode::mms:
                e = exact_error(solution(n), initial_preset(config));
                break;
            case StudyMode::cauchy:
                e = difference(solution(n), solution(2 * n));
                break;
            case StudyMode::reference:
                e = difference(solution(n), solution(config.study.reference_n));
                break;
        }
        StudyRow row;
        row.n = n;
        row.h = config.length / static_cast<double>(n);
        row.error_rho = e.rho;
        row.error_u = e.u;
        row.error_theta = e.theta;
        row.order_rho = row.order_u = row.order_theta = std::numeric_limits<double>::quiet_NaN();
        if (!study.rows.empty()) {
            const StudyRow& p = study.rows.back();
            row.order_rho = order(p.error_rho, row.error_rho, p.n, n);
            row.order_u = order(p.error_u, row.error_u, p.n, n);
            row.order_theta = order(p.error_theta, row.error_theta, p.n, n);
        }
        study.rows.push_back(row);
        // coarse solutions are no longer needed; keep only what a later row may reuse
        for (auto it = cache.begin(); it != cache.end();) {
            it = it->first <= n ? cache.erase(it) : std::next(it);
        }
    }
    return study;
}

std::vector<D3Row> d3_study(const RunConfig& config) {
    config.validate();
    std::vector<D3Row> rows;
    for (Index n : config.study.grids) {
        RunConfig c = config;
        c.n = n;
        D3Row row{n, run(c).integrated_d3_l1, std::numeric_limits<double>::quiet_NaN()};
        if (!rows.empty()) row.order = order(rows.back().integrated_d3_l1, row.integrated_d3_l1, rows.back().n, n);
        rows.push_back(row);
    }
    return rows;
}

namespace {

const char* mode_name(StudyMode m) {
    switch (m) {
        case StudyMode::mms:
            return "mms";
        case StudyMode::cauchy:
            return "cauchy";
        case StudyMode::reference:
            return "reference";
    }
    return "?";
}

}  // namespace

void write_study_table(std::ostream& out, const StudyResult& study) {
    out << "convergence study (" << mode_name(study.mode) << ")\n";
    out << std::setw(6) << "n" << std::setw(12) << "h" << std::setw(14) << "err_rho" << std::setw(8) << "ord"
        << std::setw(14) << "err_u" << std::setw(8) << "ord" << std::setw(14) << "err_theta" << std::setw(8)
        << "ord" << '\n';
    for (const StudyRow& r : study.rows) {
        const auto ord = [&](double o) -> std::ostream& {
            if (std::isnan(o)) return out << std::setw(8) << "-";
            return out << std::setw(8) << std::fixed << std::setprecision(2) << o << std::defaultfloat << std::setprecision(4);
        };
        out << std::setw(6) << r.n << std::setw(12) << std::setprecision(4) << r.h << std::scientific
            << std::setprecision(4) << std::setw(14) << r.error_rho << std::defaultfloat;
        ord(r.order_rho);
        out << std::scientific << std::setw(14) << r.error_u << std::defaultfloat;
        ord(r.order_u);
        out << std::scientific << std::setw(14) << r.error_theta << std::defaultfloat;
        ord(r.order_theta);
        out << '\n';
    }
}

void write_study_csv(std::ostream& out, const StudyResult& study) {
    out << "n,h,error_rho,error_u,error_theta,order_rho,order_u,order_theta\n";
    out << std::setprecision(17);
    for (const StudyRow& r : study.rows) {
        out << r.n << ',' << r.h << ',' << r.error_rho << ',' << r.error_u << ',' << r.error_theta << ','
            << r.order_rho << ',' << r.order_u << ',' << r.order_theta << '\n';
    }
}

}  // namespace nsfv
