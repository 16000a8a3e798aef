#include "nsfv/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>

#include "nsfv/errors.hpp"

namespace nsfv {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    double x = 0.0;
    const auto* end = v.data() + v.size();
    auto [p, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || p != end || !std::isfinite(x)) {
        throw ConfigError(key + ": expected a number, got '" + v + "'");
    }
    return x;
}

long long to_int(const std::string& key, const std::string& v) {
    long long x = 0;
    const auto* end = v.data() + v.size();
    auto [p, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || p != end) throw ConfigError(key + ": expected an integer, got '" + v + "'");
    return x;
}

double positive(const std::string& key, const std::string& v) {
    const double x = to_double(key, v);
    if (!(x > 0.0)) throw ConfigError(key + " must be positive");
    return x;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

}  // namespace

int RunConfig::step_count() const {
    if (t_end <= 0.0) return 0;
    return static_cast<int>(std::ceil(t_end / dt() - 1e-9));
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
    const std::string& v = value;
    if (key == "dim") {
        const auto d = to_int(key, v);
        if (d != 2 && d != 3) throw ConfigError("dim must be 2 or 3");
        c.dim = static_cast<int>(d);
    } else if (key == "n") {
        const auto n = to_int(key, v);
        if (n < 2) throw ConfigError("n must be at least 2");
        c.n = static_cast<Index>(n);
    } else if (key == "length") {
        c.length = positive(key, v);
    } else if (key == "c_v") {
        c.gas.c_v = positive(key, v);
    } else if (key == "mu") {
        c.gas.mu = positive(key, v);
    } else if (key == "lambda") {
        const double x = to_double(key, v);
        if (!(x >= 0.0)) throw ConfigError("lambda must be nonnegative");
        c.gas.lambda = x;
    } else if (key == "kappa") {
        c.gas.kappa = positive(key, v);
    } else if (key == "epsilon") {
        const double x = to_double(key, v);
        if (!(x > 0.0 && x < 1.0)) throw ConfigError("epsilon must lie in (0,1)");
        c.epsilon = x;
    } else if (key == "c_dt") {
        c.c_dt = positive(key, v);
    } else if (key == "t_end") {
        const double x = to_double(key, v);
        if (!(x >= 0.0)) throw ConfigError("t_end must be nonnegative");
        c.t_end = x;
    } else if (key == "picard_tol") {
        c.solver.picard_tol = positive(key, v);
    } else if (key == "max_picard") {
        const auto m = to_int(key, v);
        if (m < 1) throw ConfigError("max_picard must be at least 1");
        c.solver.max_picard = static_cast<int>(m);
    } else if (key == "omega") {
        const double x = to_double(key, v);
        if (!(x > 0.0 && x <= 1.0)) throw ConfigError("omega must lie in (0,1]");
        c.solver.omega = x;
    } else if (key == "linear_tol") {
        c.solver.linear_tol = positive(key, v);
    } else if (key == "linear_solver") {
        if (v == "direct") c.solver.linear_solver = LinearSolverKind::direct;
        else if (v == "bicgstab") c.solver.linear_solver = LinearSolverKind::bicgstab;
        else throw ConfigError("linear_solver must be 'direct' or 'bicgstab'");
    } else if (key == "initial") {
        if (v != "constant" && v != "smooth" && v != "mms") {
            throw ConfigError("initial must be one of constant, smooth, mms");
        }
        c.initial = v;
    } else if (key == "forcing") {
        if (v != "none" && v != "mms") throw ConfigError("forcing must be 'none' or 'mms'");
        c.forcing = v;
    } else if (key == "output_dir") {
        c.output.output_dir = v;
    } else if (key == "diagnostics_file") {
        c.output.diagnostics_file = v == "none" ? std::string{} : v;
    } else if (key == "snapshot_every") {
        const auto s = to_int(key, v);
        if (s < 0) throw ConfigError("snapshot_every must be nonnegative");
        c.output.snapshot_every = static_cast<int>(s);
    } else if (key == "snapshot_prefix") {
        c.output.snapshot_prefix = v;
    } else if (key == "grids") {
        std::vector<Index> grids;
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto g = to_int(key, trim(item));
            if (g < 2) throw ConfigError("grids entries must be at least 2");
            grids.push_back(static_cast<Index>(g));
        }
        if (grids.empty()) throw ConfigError("grids must list at least one size");
        c.study.grids = std::move(grids);
    } else if (key == "mode") {
        if (v == "cauchy") c.study.mode = StudyMode::cauchy;
        else if (v == "mms") c.study.mode = StudyMode::mms;
        else if (v == "reference") c.study.mode = StudyMode::reference;
        else throw ConfigError("mode must be one of cauchy, mms, reference");
    } else if (key == "reference_n") {
        const auto r = to_int(key, v);
        if (r < 2) throw ConfigError("reference_n must be at least 2");
        c.study.reference_n = static_cast<Index>(r);
    } else if (key == "trials") {
        const auto t = to_int(key, v);
        if (t < 1) throw ConfigError("trials must be at least 1");
        c.trials = static_cast<int>(t);
    } else if (key == "seed") {
        const auto s = to_int(key, v);
        if (s < 0) throw ConfigError("seed must be nonnegative");
        c.seed = static_cast<std::uint64_t>(s);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

void RunConfig::validate() const {
    if (dim != 2 && dim != 3) throw ConfigError("dim must be 2 or 3");
    if (n < 2) throw ConfigError("n must be at least 2");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("epsilon must lie in (0,1)");
    if (!(gas.c_v > 0.0)) throw ConfigError("c_v must be positive");
    if (!(gas.mu > 0.0)) throw ConfigError("mu must be positive");
    if (!(gas.lambda >= 0.0)) throw ConfigError("lambda must be nonnegative");
    if (!(gas.kappa > 0.0)) throw ConfigError("kappa must be positive");
    if (!(c_dt > 0.0)) throw ConfigError("c_dt must be positive");
    if (!(t_end >= 0.0)) throw ConfigError("t_end must be nonnegative");
    if (!(solver.picard_tol > 0.0)) throw ConfigError("picard_tol must be positive");
    if (!(solver.linear_tol > 0.0)) throw ConfigError("linear_tol must be positive");
    if (!(solver.omega > 0.0 && solver.omega <= 1.0)) throw ConfigError("omega must lie in (0,1]");
    if (solver.max_picard < 1) throw ConfigError("max_picard must be at least 1");
    if ((initial == "mms" || forcing == "mms") && dim != 2) {
        throw ConfigError("initial/forcing 'mms' is only available for dim = 2");
    }
}

RunConfig parse_config(std::istream& in, const std::string& source) {
    RunConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = source + ":" + std::to_string(lineno) + ": ";
        if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + "missing key before '='");
        if (value.empty()) throw ConfigError(where + key + ": missing value");
        try {
            apply_setting(c, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
    }
    c.validate();
    return c;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

void apply_overrides(RunConfig& config, const std::vector<std::string>& overrides) {
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError("override '" + o + "' is not of the form key=value");
        apply_setting(config, trim(o.substr(0, eq)), trim(o.substr(eq + 1)));
    }
    config.validate();
}

std::string to_string(const RunConfig& c) {
    std::ostringstream os;
    os << "dim = " << c.dim << '\n'
       << "n = " << c.n << '\n'
       << "length = " << fmt(c.length) << '\n'
       << "c_v = " << fmt(c.gas.c_v) << '\n'
       << "mu = " << fmt(c.gas.mu) << '\n'
       << "lambda = " << fmt(c.gas.lambda) << '\n'
       << "kappa = " << fmt(c.gas.kappa) << '\n'
       << "epsilon = " << fmt(c.epsilon) << '\n'
       << "c_dt = " << fmt(c.c_dt) << '\n'
       << "t_end = " << fmt(c.t_end) << '\n'
       << "picard_tol = " << fmt(c.solver.picard_tol) << '\n'
       << "max_picard = " << c.solver.max_picard << '\n'
       << "omega = " << fmt(c.solver.omega) << '\n'
       << "linear_tol = " << fmt(c.solver.linear_tol) << '\n'
       << "linear_solver = " << (c.solver.linear_solver == LinearSolverKind::direct ? "direct" : "bicgstab") << '\n'
       << "initial = " << c.initial << '\n'
       << "forcing = " << c.forcing << '\n'
       << "output_dir = " << c.output.output_dir << '\n';
    os << "diagnostics_file = " << (c.output.diagnostics_file.empty() ? "none" : c.output.diagnostics_file) << '\n';
    os << "snapshot_every = " << c.output.snapshot_every << '\n'
       << "snapshot_prefix = " << c.output.snapshot_prefix << '\n'
       << "grids = ";
    for (std::size_t i = 0; i < c.study.grids.size(); ++i) os << (i ? "," : "") << c.study.grids[i];
    os << '\n'
       << "mode = "
       << (c.study.mode == StudyMode::cauchy ? "cauchy" : c.study.mode == StudyMode::mms ? "mms" : "reference") << '\n'
       << "reference_n = " << c.study.reference_n << '\n'
       << "trials = " << c.trials << '\n'
       << "seed = " << c.seed << '\n';
    return os.str();
}

}  // namespace nsfv
