#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nsfv/config.hpp"
#include "nsfv/fields.hpp"
#include "nsfv/scheme.hpp"
#include "nsfv/state.hpp"

namespace nsfv {

struct IdentityResult {
    std::string name;
    double max_relative_error = 0.0;
    int trials = 0;
};

/// Face algebra, grad-div duality, integration by parts and operator factorizations,
/// evaluated on `trials` seeded random fields. The relative error of each trial is
/// |lhs - rhs| / (sum of magnitudes of the terms involved).
[[nodiscard]] std::vector<IdentityResult> check_identities(int dim, Index n, int trials, std::uint64_t seed);

/// Reformulation of the convective term tested with a smooth phi:
///   Int r v.grad phi - Sum |sigma| F_h[r, v] jump(Pi phi)
///     = Sum |sigma| (|ubar.n|/2 + h^eps + jump(v).n/4) jump(r) jump(Pi phi) + Int r v.(grad phi - grad_h Pi phi)
/// for random r, v. grad phi enters only through its cell projection, so both sides use the
/// same quadrature and the identity is exact. Returns the relative defect.
[[nodiscard]] double check_convective_reformulation(const Mesh& mesh, const FluxParams& flux, const ScalarFunction& phi,
                                                    const std::vector<ScalarFunction>& grad_phi, std::uint64_t seed);

/// Identities tying the scheme residual to the balance laws, on random state pairs:
/// convective momentum form, renormalized continuity and energy, total energy and entropy balance.
[[nodiscard]] std::vector<IdentityResult> check_scheme_identities(int dim, Index n, int trials, std::uint64_t seed);

/// Random positive state (rho, theta in [0.5, 1.5], |u_i| <= 0.5).
[[nodiscard]] State random_state(const Mesh& mesh, std::uint64_t seed);

/// Max over cells of the momentum residual minus u times the mass residual,
/// compared with the convective (nonconservative) form, relative to the size of its terms.
[[nodiscard]] double convective_form_error(const Scheme& scheme, const State& k, const State& km1);

/// The renormalized continuity equation, for b = renormalization function and test function phi:
///   Int phi D_t b(rho) + 1/dt Int phi R_b(rho^{k-1}; rho^k) - Sum |sigma| ubar b(rho^up) jump(phi)
///   + Int phi (rho b' - b) div_h u + Sum |sigma| |ubar| phi^down R_b(rho^up; rho^down)
///   + h^eps Sum |sigma| jump(rho) jump(phi b'(rho))
/// `lhs` is that expression; `tested_residual` = Int phi b'(rho) r_mass, which it equals identically.
/// `scale` bounds |tested_residual| / (solver residual norm).
struct RenormalizedCheck {
    double lhs = 0.0;
    double tested_residual = 0.0;
    double scale = 0.0;

    /// |lhs - tested_residual| relative to scale.
    [[nodiscard]] double identity_error() const;
};

[[nodiscard]] RenormalizedCheck renormalized_continuity(const Scheme& scheme, const State& k, const State& km1,
                                                        const CellField& phi);

/// The internal energy equation tested with phi/theta, continuity tested with
/// c_v phi (1 - log theta) subtracted: the discrete equation for c_v rho log theta.
[[nodiscard]] RenormalizedCheck renormalized_energy(const Scheme& scheme, const State& k, const State& km1,
                                                    const CellField& phi);

/// Random test function with values in [-1, 1].
[[nodiscard]] CellField random_test_function(const Mesh& mesh, std::uint64_t seed);

struct StudyRow {
    Index n = 0;
    double h = 0.0;
    double error_rho = 0.0;
    double error_u = 0.0;
    double error_theta = 0.0;
    double order_rho = 0.0;  // NaN on the first row
    double order_u = 0.0;
    double order_theta = 0.0;
};

struct StudyResult {
    StudyMode mode = StudyMode::mms;
    std::vector<StudyRow> rows;
};

/// Cell averages of the fine field over the 2^dim children of each coarse cell.
[[nodiscard]] CellField restrict_to(const CellField& fine, const Mesh& coarse);

/// Runs the configured problem on each grid of `config.study.grids` to t_end and
/// measures L2 errors: against the exact solution (mms), against the next finer grid
/// restricted (cauchy; the last grid is compared with one extra doubling), or
/// against a single `reference_n` run (reference). Orders are log(e_i/e_{i+1})/log(n_{i+1}/n_i).
[[nodiscard]] StudyResult convergence_study(const RunConfig& config);

struct D3Row {
    Index n = 0;
    double integrated_d3_l1 = 0.0;
    double order = 0.0;  // NaN on the first row
};

/// Sum_k dt Int |D3| over [0, t_end] on each grid.
[[nodiscard]] std::vector<D3Row> d3_study(const RunConfig& config);

void write_study_table(std::ostream& out, const StudyResult& study);
void write_study_csv(std::ostream& out, const StudyResult& study);

}  // namespace nsfv
