#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nsfv/errors.hpp"
#include "nsfv/io.hpp"
#include "nsfv/problems.hpp"
#include "nsfv/run.hpp"
#include "nsfv/scheme.hpp"
#include "nsfv/verify.hpp"

using namespace nsfv;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST(Io, DiagnosticsSchema) {
    const auto& cols = diagnostics_columns();
    EXPECT_EQ(cols.size(), 28u);
    EXPECT_EQ(cols.front(), "step");
    std::ostringstream out;
    const DiagnosticsRecord rec;
    write_diagnostics(out, std::span<const DiagnosticsRecord>(&rec, 1));
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(std::count(lines[0].begin(), lines[0].end(), ','), 27);
    EXPECT_EQ(std::count(lines[1].begin(), lines[1].end(), ','), 27);
}

TEST(Io, DiagnosticsRoundTripIsBitExact) {
    RunConfig c;
    c.n = 8;
    c.t_end = 0.04;
    const RunResult r = run(c);
    std::stringstream buf;
    write_diagnostics(buf, r.records);
    const CsvTable t = read_csv(buf);
    ASSERT_EQ(t.rows.size(), r.records.size());
    const std::size_t mass = t.column("mass"), energy = t.column("total_energy"), time = t.column("time");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_EQ(t.rows[i][mass], r.records[i].mass);
        EXPECT_EQ(t.rows[i][energy], r.records[i].total_energy);
        EXPECT_EQ(t.rows[i][time], r.records[i].time);
    }
    EXPECT_THROW((void)t.column("nope"), InvalidArgument);
}

TEST(Io, ConstantRunColumnsAreConstant) {
    RunConfig c;
    c.n = 4;
    c.initial = "constant";
    c.t_end = 0.1;
    const RunResult r = run(c);
    std::stringstream buf;
    write_diagnostics(buf, r.records);
    const CsvTable t = read_csv(buf);
    for (const char* col : {"mass", "total_energy"}) {
        const std::size_t j = t.column(col);
        for (const auto& row : t.rows) EXPECT_NEAR(row[j], t.rows[0][j], 1e-13) << col;
    }
}

TEST(Io, VtkTwoByTwo) {
    RunConfig c;
    c.n = 2;
    Scheme s(c);
    const State st = s.init_state(constant_data(2, 2.0, {0.5, -0.5}, 1.5));
    std::ostringstream out;
    write_vtk(out, st);
    const std::string text = out.str();
    EXPECT_EQ(text.rfind("# vtk DataFile Version", 0), 0u);
    EXPECT_NE(text.find("ASCII"), std::string::npos);
    EXPECT_NE(text.find("DATASET STRUCTURED_POINTS"), std::string::npos);
    EXPECT_NE(text.find("DIMENSIONS 3 3 1"), std::string::npos);
    EXPECT_NE(text.find("CELL_DATA 4"), std::string::npos);
    for (const char* key : {"SCALARS rho", "SCALARS theta", "SCALARS pressure", "VECTORS velocity"})
        EXPECT_NE(text.find(key), std::string::npos) << key;
    const auto lines = lines_of(text);
    const auto v = std::find_if(lines.begin(), lines.end(), [](const std::string& l) { return l.rfind("VECTORS", 0) == 0; });
    ASSERT_NE(v, lines.end());
    ASSERT_GE(lines.end() - v, 5);
    double a = 0, b = 0, z = 1;
    std::istringstream(*(v + 1)) >> a >> b >> z;
    EXPECT_DOUBLE_EQ(a, 0.5);
    EXPECT_DOUBLE_EQ(b, -0.5);
    EXPECT_EQ(z, 0.0);
}

TEST(Io, RunWithOutputWritesFiles) {
    const auto dir = std::filesystem::temp_directory_path() / "nsfv_io_test";
    std::filesystem::remove_all(dir);
    RunConfig c;
    c.n = 4;
    c.t_end = 0.1;
    c.output.output_dir = dir.string();
    c.output.snapshot_every = 2;
    const RunResult r = run_with_output(c);
    std::ifstream in(dir / "diagnostics.csv");
    ASSERT_TRUE(in.good());
    EXPECT_EQ(read_csv(in).rows.size(), r.records.size());
    EXPECT_TRUE(std::filesystem::exists(dir / "snapshot_000000.vtk"));
    EXPECT_TRUE(std::filesystem::exists(dir / "snapshot_000002.vtk"));
    std::filesystem::remove_all(dir);
}

TEST(Io, StudyCsvColumns) {
    StudyResult s;
    s.rows.push_back({16, 1.0 / 16, 1e-3, 2e-3, 3e-3, std::nan(""), std::nan(""), std::nan("")});
    s.rows.push_back({32, 1.0 / 32, 5e-4, 1e-3, 1.5e-3, 1.0, 1.0, 1.0});
    std::ostringstream out;
    write_study_csv(out, s);
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "n,h,error_rho,error_u,error_theta,order_rho,order_u,order_theta");
    std::ostringstream table;
    write_study_table(table, s);
    EXPECT_NE(table.str().find("32"), std::string::npos);
}
