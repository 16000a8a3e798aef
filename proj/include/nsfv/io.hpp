#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nsfv/diagnostics.hpp"
#include "nsfv/state.hpp"

namespace nsfv {

/// Column names of the diagnostics CSV, in order.
[[nodiscard]] const std::vector<std::string>& diagnostics_columns();

/// One CSV row per record, values printed with 17 significant digits.
void write_diagnostics(std::ostream& out, std::span<const DiagnosticsRecord> records);
void write_diagnostics_file(const std::string& path, std::span<const DiagnosticsRecord> records);

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Throws InvalidArgument for an unknown column.
    [[nodiscard]] std::size_t column(const std::string& name) const;
};

[[nodiscard]] CsvTable read_csv(std::istream& in);

/// Legacy ASCII VTK structured-points file with cell data rho, theta, pressure and velocity.
void write_vtk(std::ostream& out, const State& state, const std::string& title = "nsfv snapshot");
void write_vtk_file(const std::string& path, const State& state);

}  // namespace nsfv
