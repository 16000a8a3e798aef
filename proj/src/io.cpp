#include "nsfv/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nsfv/errors.hpp"

namespace nsfv {

const std::vector<std::string>& diagnostics_columns() {
    static const std::vector<std::string> columns{
        "step",          "time",          "mass",
        "kinetic_energy", "internal_energy", "total_energy",
        "total_entropy", "energy_residual", "T_hdiff",
        "T_dtdiss",      "T_upwdiss",     "Bh",
        "D1_int",        "D2_int",        "D3_l1",
        "entropy_residual", "kappa_production", "viscous_production",
        "min_rho",       "max_rho",       "min_theta",
        "max_theta",     "max_speed",     "jump_u_heps",
        "upw_diss_rho",  "grad_theta_l2", "picard_iters",
        "wall_ms"};
    return columns;
}

void write_diagnostics(std::ostream& out, std::span<const DiagnosticsRecord> records) {
    const auto& cols = diagnostics_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    out << std::setprecision(17);
    for (const DiagnosticsRecord& r : records) {
        const Monitors& m = r.monitors;
        out << r.step;
        for (double v : {r.time, r.mass, r.kinetic_energy, r.internal_energy, r.total_energy, r.total_entropy,
                         r.energy.residual, r.energy.h_diffusion, r.energy.time_dissipation,
                         r.energy.upwind_dissipation, r.entropy_production_bh, r.d1, r.d2, r.d3_l1,
                         r.entropy_residual, r.kappa_production, r.viscous_production, m.min_rho, m.max_rho,
                         m.min_theta, m.max_theta, m.max_speed, m.jump_u_heps, m.upwind_jump_rho,
                         std::sqrt(m.grad_theta_l2sq)}) {
            out << ',' << v;
        }
        out << ',' << r.picard_iterations << ',' << r.wall_ms << '\n';
    }
}

void write_diagnostics_file(const std::string& path, std::span<const DiagnosticsRecord> records) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_diagnostics(out, records);
}

std::size_t CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw InvalidArgument("no column named " + name);
}

CsvTable read_csv(std::istream& in) {
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) return t;
    std::stringstream header(line);
    for (std::string cell; std::getline(header, cell, ',');) t.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::vector<double> row;
        for (std::string cell; std::getline(ss, cell, ',');) row.push_back(std::stod(cell));
        if (row.size() != t.columns.size()) throw InvalidArgument("ragged csv row: " + line);
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_vtk(std::ostream& out, const State& state, const std::string& title) {
    const Mesh& mesh = state.mesh();
    const Index n = mesh.cells_per_dim();
    const double h = mesh.h();
    const bool three = mesh.dim() == 3;
    out << "# vtk DataFile Version 3.0\n" << title << "\nASCII\nDATASET STRUCTURED_POINTS\n";
    out << "DIMENSIONS " << n + 1 << ' ' << n + 1 << ' ' << (three ? n + 1 : 1) << '\n';
    out << "ORIGIN 0 0 0\n";
    out << std::setprecision(17);
    out << "SPACING " << h << ' ' << h << ' ' << (three ? h : 1.0) << '\n';
    out << "CELL_DATA " << mesh.cell_count() << '\n';
    const CellField p = state.pressure();
    const std::pair<const char*, const CellField*> scalars[] = {
        {"rho", &state.rho}, {"theta", &state.theta}, {"pressure", &p}};
    for (const auto& [name, field] : scalars) {
        out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (Index k = 0; k < mesh.cell_count(); ++k) out << (*field)[k] << '\n';
    }
    out << "VECTORS velocity double\n";
    for (Index k = 0; k < mesh.cell_count(); ++k) {
        out << state.u[0][k] << ' ' << state.u[1][k] << ' ' << (three ? state.u[2][k] : 0.0) << '\n';
    }
}

void write_vtk_file(const std::string& path, const State& state) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_vtk(out, state);
}

}  // namespace nsfv
