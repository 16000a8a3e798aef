// Command-line driver: run, verify, renorm, converge, mms.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "nsfv/config.hpp"
#include "nsfv/errors.hpp"
#include "nsfv/io.hpp"
#include "nsfv/problems.hpp"
#include "nsfv/run.hpp"
#include "nsfv/scheme.hpp"
#include "nsfv/verify.hpp"

namespace {

enum ExitCode { ok = 0, failure = 1, config_error = 2, non_convergence = 3, positivity_loss = 4 };

struct Common {
    std::string config_path;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("-c,--config", c.config_path, "configuration file (key = value lines)");
    cmd->add_option("-s,--set", c.overrides, "override a key, e.g. --set n=64")->take_all();
}

nsfv::RunConfig load(const Common& c) {
    nsfv::RunConfig cfg = c.config_path.empty() ? nsfv::RunConfig{} : nsfv::parse_config_file(c.config_path);
    nsfv::apply_overrides(cfg, c.overrides);
    return cfg;
}

void apply_thread_env() {
    const char* env = std::getenv("NSFV_THREADS");
    if (!env || !*env) return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw nsfv::ConfigError("NSFV_THREADS must be a positive integer, got '" + std::string(env) + "'");
    nsfv::set_thread_count(static_cast<int>(v));
}

int cmd_run(const Common& c) {
    const nsfv::RunConfig cfg = load(c);
    const nsfv::RunResult r = nsfv::run_with_output(cfg, [](const nsfv::State& s, const nsfv::DiagnosticsRecord& d) {
        if (s.step == 0) return;
        std::cout << "step " << s.step << " t=" << s.time << " E=" << std::setprecision(12) << d.total_energy
                  << " picard=" << d.picard_iterations << '\n';
    });
    const nsfv::DiagnosticsRecord& last = r.records.back();
    std::cout << std::setprecision(17) << "completed " << last.step << " steps to t=" << last.time
              << "\nmass " << last.mass << "\ntotal_energy " << last.total_energy << "\ntotal_entropy "
              << last.total_entropy << "\nintegrated_D3_l1 " << r.integrated_d3_l1 << '\n';
    return ok;
}

int cmd_verify(const Common& c, double tolerance) {
    const nsfv::RunConfig cfg = load(c);
    bool pass = true;
    const auto report = [&](int dim, nsfv::Index n, const std::string& name, double err) {
        const bool good = err <= tolerance;
        pass = pass && good;
        std::cout << (good ? "ok   " : "FAIL ") << "dim=" << dim << " n=" << std::setw(2) << n << "  "
                  << std::scientific << std::setprecision(3) << err << std::defaultfloat << "  " << name << '\n';
    };
    for (int dim : {2, 3}) {
        for (nsfv::Index n : {2, 4, 8, 16, 32}) {
            for (const nsfv::IdentityResult& r : nsfv::check_identities(dim, n, cfg.trials, cfg.seed)) {
                report(dim, n, r.name, r.max_relative_error);
            }
        }
    }
    const nsfv::ScalarFunction phi = [](const nsfv::Point& x) {
        return std::sin(2 * M_PI * x[0]) * std::cos(2 * M_PI * x[1]);
    };
    const std::vector<nsfv::ScalarFunction> grad_phi{
        [](const nsfv::Point& x) { return 2 * M_PI * std::cos(2 * M_PI * x[0]) * std::cos(2 * M_PI * x[1]); },
        [](const nsfv::Point& x) { return -2 * M_PI * std::sin(2 * M_PI * x[0]) * std::sin(2 * M_PI * x[1]); },
        [](const nsfv::Point&) { return 0.0; }};
    for (int dim : {2, 3}) {
        for (nsfv::Index n : {4, 8, 16}) {
            const nsfv::Mesh mesh(dim, n, cfg.length);
            const nsfv::FluxParams flux(cfg.epsilon, mesh.h());
            const std::vector<nsfv::ScalarFunction> g(grad_phi.begin(), grad_phi.begin() + dim);
            report(dim, n, "convective reformulation", nsfv::check_convective_reformulation(mesh, flux, phi, g, cfg.seed));
            for (const nsfv::IdentityResult& r : nsfv::check_scheme_identities(dim, n, 10, cfg.seed)) {
                report(dim, n, r.name, r.max_relative_error);
            }
        }
    }
    std::cout << (pass ? "all identities hold" : "identity violations found") << '\n';
    return pass ? ok : failure;
}

int cmd_renorm(const Common& c, int steps) {
    const nsfv::RunConfig cfg = load(c);
    nsfv::Scheme scheme(cfg, nsfv::forcing_preset(cfg));
    nsfv::State prev = scheme.init_state(nsfv::initial_preset(cfg));
    const double tol = cfg.solver.picard_tol;
    bool pass = true;
    std::cout << "step  continuity/scale  energy/scale  identity_error\n";
    for (int s = 0; s < steps; ++s) {
        nsfv::StepResult next = scheme.step(prev);
        const nsfv::CellField phi = nsfv::random_test_function(scheme.mesh(), cfg.seed + static_cast<unsigned>(s));
        const nsfv::RenormalizedCheck rc = nsfv::renormalized_continuity(scheme, next.state, prev, phi);
        const nsfv::RenormalizedCheck re = nsfv::renormalized_energy(scheme, next.state, prev, phi);
        const double a = std::abs(rc.lhs) / rc.scale;
        const double b = std::abs(re.lhs) / re.scale;
        pass = pass && a <= 10.0 * tol && b <= 10.0 * tol;
        std::cout << std::setw(4) << next.state.step << std::scientific << std::setprecision(3) << std::setw(18) << a
                  << std::setw(14) << b << std::setw(16) << std::max(rc.identity_error(), re.identity_error())
                  << std::defaultfloat << '\n';
        prev = std::move(next.state);
    }
    std::cout << (pass ? "renormalized residuals within 10 * picard_tol" : "renormalized residuals too large")
              << '\n';
    return pass ? ok : failure;
}

int cmd_study(const Common& c, bool mms) {
    nsfv::RunConfig cfg = load(c);
    if (mms) {
        nsfv::apply_overrides(cfg, {"initial=mms", "forcing=mms", "mode=mms"});
    }
    const nsfv::StudyResult study = nsfv::convergence_study(cfg);
    nsfv::write_study_table(std::cout, study);
    std::filesystem::create_directories(cfg.output.output_dir);
    const std::string path = (std::filesystem::path(cfg.output.output_dir) / (mms ? "mms.csv" : "convergence.csv")).string();
    std::ofstream out(path);
    if (!out) throw nsfv::Error("cannot open " + path + " for writing");
    nsfv::write_study_csv(out, study);
    std::cout << "wrote " << path << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Implicit finite volume solver for compressible Navier-Stokes-Fourier flow on periodic grids"};
    app.require_subcommand(1);

    Common run_opts, verify_opts, renorm_opts, converge_opts, mms_opts;
    CLI::App* run = app.add_subcommand("run", "advance the configured problem to t_end");
    add_common(run, run_opts);
    CLI::App* verify = app.add_subcommand("verify", "check the discrete identity battery on random fields");
    add_common(verify, verify_opts);
    double tolerance = 1e-12;
    verify->add_option("--tolerance", tolerance, "maximum relative error")->capture_default_str();
    CLI::App* renorm = app.add_subcommand("renorm", "renormalized equation residuals on converged steps");
    add_common(renorm, renorm_opts);
    int renorm_steps = 10;
    renorm->add_option("--steps", renorm_steps, "number of steps")->capture_default_str();
    CLI::App* converge = app.add_subcommand("converge", "grid refinement study (mode from config)");
    add_common(converge, converge_opts);
    CLI::App* mms = app.add_subcommand("mms", "manufactured solution convergence study");
    add_common(mms, mms_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    try {
        apply_thread_env();
        if (*run) return cmd_run(run_opts);
        if (*verify) return cmd_verify(verify_opts, tolerance);
        if (*renorm) return cmd_renorm(renorm_opts, renorm_steps);
        if (*converge) return cmd_study(converge_opts, false);
        if (*mms) return cmd_study(mms_opts, true);
    } catch (const nsfv::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return config_error;
    } catch (const nsfv::NonConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << '\n';
        return non_convergence;
    } catch (const nsfv::PositivityLoss& e) {
        std::cerr << "positivity loss: " << e.what() << '\n';
        return positivity_loss;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failure;
    }
    return failure;
}
