#include "nsfv/scheme.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>

#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "nsfv/errors.hpp"
#include "nsfv/operators.hpp"

namespace nsfv {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;
using Trip = Eigen::Triplet<double>;

class LinearSolver {
public:
    /// Solves A x = b in place (x holds the initial guess); returns the iteration count.
    int solve(const SpMat& a, const Vec& b, Vec& x, const SolverSettings& settings, const char* name) {
        const double bnorm = std::max(b.lpNorm<Eigen::Infinity>(), 1e-300);
        const double target = settings.linear_tol * bnorm;
        int iterations = 0;
        if (settings.linear_solver == LinearSolverKind::direct) {
            // The sparsity pattern is fixed for the lifetime of a Scheme.
            if (!analyzed_) {
                lu_.analyzePattern(a);
                analyzed_ = true;
            }
            lu_.factorize(a);
            if (lu_.info() != Eigen::Success) fail(name, "sparse LU factorization failed");
            x = lu_.solve(b);
            if (lu_.info() != Eigen::Success) fail(name, "sparse LU solve failed");
            iterations = 1;
        } else {
            // Defect correction: the Krylov tolerance is relative to the current defect,
            // which shrinks with the Picard iteration.
            krylov_.compute(a);
            for (int round = 0; round < 4; ++round) {
                const Vec defect = b - a * x;
                const double dnorm = defect.lpNorm<Eigen::Infinity>();
                if (dnorm <= 1e-3 * target || dnorm == 0.0) break;
                krylov_.setTolerance(1e-10);
                krylov_.setMaxIterations(2000);
                const Vec delta = krylov_.solve(defect);
                if (krylov_.info() == Eigen::NumericalIssue) fail(name, "BiCGSTAB breakdown");
                iterations += static_cast<int>(krylov_.iterations());
                x += delta;
            }
        }
        const double rnorm = (a * x - b).lpNorm<Eigen::Infinity>();
        if (!std::isfinite(rnorm) || rnorm > target) {
            std::ostringstream os;
            os << "relative linear residual " << rnorm / bnorm << " exceeds linear_tol";
            fail(name, os.str());
        }
        return iterations;
    }

private:
    [[noreturn]] static void fail(const char* name, const std::string& what) {
        throw LinearSolveFailure(std::string(name) + " system: " + what);
    }

    Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu_;
    bool analyzed_ = false;
    Eigen::BiCGSTAB<SpMat, Eigen::DiagonalPreconditioner<double>> krylov_;
};

/// Triplets of the operator x -> div_T F_h(s x, ubar), s an optional per-cell scale.
void add_flux_operator(std::vector<Trip>& t, const Mesh& mesh, const FaceField& ubar, double heps,
                       const CellField* scale, double factor, Index offset) {
    const double inv_h = factor / mesh.h();
    for (int d = 0; d < mesh.dim(); ++d) {
        for (Index k = 0; k < mesh.cell_count(); ++k) {
            const Index l = mesh.neighbor(k, d, +1);
            const double u = ubar(d, k);
            const double a = inv_h * (positive_part(u) + heps);
            const double b = inv_h * (negative_part(u) - heps);
            const double sk = scale ? (*scale)[k] : 1.0;
            const double sl = scale ? (*scale)[l] : 1.0;
            t.emplace_back(offset + k, offset + k, a * sk);
            t.emplace_back(offset + k, offset + l, b * sl);
            t.emplace_back(offset + l, offset + k, -a * sk);
            t.emplace_back(offset + l, offset + l, -b * sl);
        }
    }
}

SpMat central_difference_matrix(const Mesh& mesh, int dir) {
    std::vector<Trip> t;
    const double c = 0.5 / mesh.h();
    for (Index k = 0; k < mesh.cell_count(); ++k) {
        t.emplace_back(k, mesh.neighbor(k, dir, +1), c);
        t.emplace_back(k, mesh.neighbor(k, dir, -1), -c);
    }
    SpMat g(mesh.cell_count(), mesh.cell_count());
    g.setFromTriplets(t.begin(), t.end());
    return g;
}

void append(std::vector<Trip>& t, const SpMat& m, double factor, Index row_off, Index col_off) {
    for (int outer = 0; outer < m.outerSize(); ++outer) {
        for (SpMat::InnerIterator it(m, outer); it; ++it) {
            t.emplace_back(row_off + it.row(), col_off + it.col(), factor * it.value());
        }
    }
}

Vec to_vec(const CellField& f) { return Eigen::Map<const Vec>(f.values().data(), static_cast<Index>(f.size())); }

CellField from_vec(const Mesh& mesh, const Vec& v, Index offset = 0) {
    CellField f(mesh);
    for (Index k = 0; k < mesh.cell_count(); ++k) f[k] = v[offset + k];
    return f;
}

void require_positive(const CellField& f, const char* what, int step, int iteration) {
    for (Index k = 0; k < f.mesh().cell_count(); ++k) {
        if (!(f[k] > 0.0) || !std::isfinite(f[k])) {
            std::ostringstream os;
            os << what << " lost positivity in cell " << k << " (value " << f[k] << ") at step " << step
               << ", Picard iteration " << iteration;
            throw PositivityLoss(os.str());
        }
    }
}

}  // namespace

void set_thread_count(int threads) {
    if (threads < 1) throw InvalidArgument("thread count must be positive");
    Eigen::setNbThreads(threads);
}

struct Scheme::Solvers {
    std::vector<Trip> viscous;  // -2 mu div_h D_h(u) - lambda grad_h div_h u, (dim N) x (dim N)
    std::vector<Trip> conduction;  // -kappa Laplacian, N x N
    LinearSolver continuity;
    LinearSolver momentum;
    LinearSolver energy;
    std::vector<Trip> work;
};

Scheme::Scheme(const RunConfig& config, std::optional<Forcing> forcing)
    : config_(config), mesh_(config.mesh()), flux_(config.flux()), dt_(config.dt()),
      solvers_(std::make_unique<Solvers>()) {
    config_.validate();
    config_.gas.validate();
    if (forcing) {
        ProjectedForcing pf{project_cell(mesh_, forcing->mass), project_cell(mesh_, forcing->momentum),
                            project_cell(mesh_, forcing->energy)};
        forcing_ = std::move(pf);
    }

    const int dim = mesh_.dim();
    const Index n = mesh_.cell_count();
    std::vector<SpMat> g;
    for (int d = 0; d < dim; ++d) g.push_back(central_difference_matrix(mesh_, d));
    SpMat lap_c(n, n);
    for (int l = 0; l < dim; ++l) lap_c += SpMat(g[static_cast<std::size_t>(l)] * g[static_cast<std::size_t>(l)]);
    const double mu = config_.gas.mu;
    const double lambda = config_.gas.lambda;
    for (int i = 0; i < dim; ++i) {
        const SpMat& gi = g[static_cast<std::size_t>(i)];
        append(solvers_->viscous, lap_c, -mu, i * n, i * n);
        for (int j = 0; j < dim; ++j) {
            const SpMat& gj = g[static_cast<std::size_t>(j)];
            append(solvers_->viscous, SpMat(gj * gi), -mu, i * n, j * n);
            append(solvers_->viscous, SpMat(gi * gj), -lambda, i * n, j * n);
        }
    }

    const double c = config_.gas.kappa / (mesh_.h() * mesh_.h());
    for (Index k = 0; k < n; ++k) {
        for (int d = 0; d < dim; ++d) {
            solvers_->conduction.emplace_back(k, mesh_.neighbor(k, d, +1), -c);
            solvers_->conduction.emplace_back(k, mesh_.neighbor(k, d, -1), -c);
        }
        solvers_->conduction.emplace_back(k, k, 2.0 * dim * c);
    }
}

Scheme::~Scheme() = default;
Scheme::Scheme(Scheme&&) noexcept = default;
Scheme& Scheme::operator=(Scheme&&) noexcept = default;

State Scheme::init_state(const InitialData& data) const {
    State s{project_cell(mesh_, data.rho), project_cell(mesh_, data.u), project_cell(mesh_, data.theta), 0.0, 0};
    s.check_positivity();
    return s;
}

Residual Scheme::residual(const State& k, const State& km1) const {
    const int dim = mesh_.dim();
    const double inv_dt = 1.0 / dt_;
    const GasParams& gas = config_.gas;
    const FaceField ubar = face_normal_velocity(k.u);
    const CellField p = k.pressure();

    Residual r{inv_dt * (k.rho - km1.rho) + div_dual(flux_field(k.rho, ubar, flux_)), CellVectorField(mesh_),
               CellField(mesh_)};

    const CellVectorField grad_p = grad_h(p);
    const CellTensorField d_u = sym_grad(k.u);
    const CellVectorField div_d = div_h(d_u);
    const CellField div_u = div_h(k.u);
    const CellVectorField grad_div = grad_h(div_u);
    for (int i = 0; i < dim; ++i) {
        const CellField m = k.momentum(i);
        r.momentum[i] = inv_dt * (m - km1.momentum(i)) + div_dual(flux_field(m, ubar, flux_)) + grad_p[i] -
                        2.0 * gas.mu * div_d[i] - gas.lambda * grad_div[i];
    }

    const CellField rt = hadamard(k.rho, k.theta);
    const CellField rt_old = hadamard(km1.rho, km1.theta);
    const CellField dissipation =
        2.0 * gas.mu * double_dot(d_u, d_u) + gas.lambda * hadamard(div_u, div_u) - hadamard(p, div_u);
    r.energy = (gas.c_v * inv_dt) * (rt - rt_old) + gas.c_v * div_dual(flux_field(rt, ubar, flux_)) -
               gas.kappa * laplace_h(k.theta) - dissipation;

    if (forcing_) {
        r.mass -= forcing_->mass;
        for (int i = 0; i < dim; ++i) r.momentum[i] -= forcing_->momentum[i];
        r.energy -= forcing_->energy;
    }
    return r;
}

double Scheme::residual_norm(const Residual& r, const State& k) const {
    double norm = r.mass.max_abs() / (1.0 + k.rho.max_abs());
    double mom_scale = 0.0;
    for (int i = 0; i < mesh_.dim(); ++i) mom_scale = std::max(mom_scale, k.momentum(i).max_abs());
    for (int i = 0; i < mesh_.dim(); ++i) norm = std::max(norm, r.momentum[i].max_abs() / (1.0 + mom_scale));
    const double e_scale = config_.gas.c_v * hadamard(k.rho, k.theta).max_abs();
    return std::max(norm, r.energy.max_abs() / (1.0 + e_scale));
}

StepResult Scheme::step(const State& previous) {
    const auto start = std::chrono::steady_clock::now();
    const int dim = mesh_.dim();
    const Index n = mesh_.cell_count();
    const double inv_dt = 1.0 / dt_;
    const GasParams& gas = config_.gas;
    const SolverSettings& settings = config_.solver;
    const double omega = settings.omega;
    const double heps = flux_.diffusion();
    Solvers& s = *solvers_;

    State it = previous;
    it.time = previous.time + dt_;
    it.step = previous.step + 1;

    StepReport report;
    for (int iter = 1; iter <= settings.max_picard; ++iter) {
        const FaceField ubar = face_normal_velocity(it.u);

        // continuity: rho / dt + div_T F_h(rho, ubar) = rho_old / dt + g
        s.work.clear();
        for (Index k = 0; k < n; ++k) s.work.emplace_back(k, k, inv_dt);
        add_flux_operator(s.work, mesh_, ubar, heps, nullptr, 1.0, 0);
        SpMat a(n, n);
        a.setFromTriplets(s.work.begin(), s.work.end());
        Vec b = inv_dt * to_vec(previous.rho);
        if (forcing_) b += to_vec(forcing_->mass);
        Vec x = to_vec(it.rho);
        report.linear_solver_iterations += s.continuity.solve(a, b, x, settings, "continuity");
        // Columns of the continuity matrix sum to 1/dt, so a uniform shift restores
        // sum(A x) = sum(b) exactly and with it discrete mass conservation.
        x.array() += dt_ * (b.sum() - (a * x).sum()) / static_cast<double>(n);
        const CellField rho_new = from_vec(mesh_, x);
        require_positive(rho_new, "density", it.step, iter);

        // momentum: rho u / dt + div_T F_h(rho u, ubar) + viscous(u) = rho_old u_old / dt - grad p + g
        s.work = s.viscous;
        for (int i = 0; i < dim; ++i) {
            for (Index k = 0; k < n; ++k) s.work.emplace_back(i * n + k, i * n + k, inv_dt * rho_new[k]);
            add_flux_operator(s.work, mesh_, ubar, heps, &rho_new, 1.0, i * n);
        }
        SpMat am(dim * n, dim * n);
        am.setFromTriplets(s.work.begin(), s.work.end());
        const CellVectorField grad_p = grad_h(hadamard(rho_new, it.theta));
        Vec bm(dim * n);
        Vec xm(dim * n);
        for (int i = 0; i < dim; ++i) {
            for (Index k = 0; k < n; ++k) {
                bm[i * n + k] = inv_dt * previous.rho[k] * previous.u[i][k] - grad_p[i][k] +
                                (forcing_ ? forcing_->momentum[i][k] : 0.0);
                xm[i * n + k] = it.u[i][k];
            }
        }
        report.linear_solver_iterations += s.momentum.solve(am, bm, xm, settings, "momentum");
        CellVectorField u_new(mesh_);
        for (int i = 0; i < dim; ++i) u_new[i] = from_vec(mesh_, xm, i * n);

        // internal energy, with the pressure work rho theta div u kept implicit
        const FaceField ubar_new = face_normal_velocity(u_new);
        const CellTensorField d_u = sym_grad(u_new);
        const CellField div_u = div_h(u_new);
        const CellField heating = 2.0 * gas.mu * double_dot(d_u, d_u) + gas.lambda * hadamard(div_u, div_u);
        s.work = s.conduction;
        for (Index k = 0; k < n; ++k) {
            s.work.emplace_back(k, k, gas.c_v * inv_dt * rho_new[k] + rho_new[k] * div_u[k]);
        }
        add_flux_operator(s.work, mesh_, ubar_new, heps, &rho_new, gas.c_v, 0);
        SpMat ae(n, n);
        ae.setFromTriplets(s.work.begin(), s.work.end());
        Vec be(n);
        for (Index k = 0; k < n; ++k) {
            be[k] = gas.c_v * inv_dt * previous.rho[k] * previous.theta[k] + heating[k] +
                    (forcing_ ? forcing_->energy[k] : 0.0);
        }
        Vec xe = to_vec(it.theta);
        report.linear_solver_iterations += s.energy.solve(ae, be, xe, settings, "energy");
        const CellField theta_new = from_vec(mesh_, xe);
        require_positive(theta_new, "temperature", it.step, iter);

        if (omega == 1.0) {
            it.rho = rho_new;
            it.u = u_new;
            it.theta = theta_new;
        } else {
            it.rho = omega * rho_new + (1.0 - omega) * it.rho;
            for (int i = 0; i < dim; ++i) it.u[i] = omega * u_new[i] + (1.0 - omega) * it.u[i];
            it.theta = omega * theta_new + (1.0 - omega) * it.theta;
        }

        report.picard_iterations = iter;
        report.final_residual_norm = residual_norm(residual(it, previous), it);
        if (report.final_residual_norm <= settings.picard_tol) {
            report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return StepResult{std::move(it), report};
        }
    }
    std::ostringstream os;
    os << "Picard iteration did not converge in " << settings.max_picard << " iterations at step " << it.step
       << " (residual " << report.final_residual_norm << ", tolerance " << settings.picard_tol << ")";
    throw NonConvergence(os.str());
}

}  // namespace nsfv
