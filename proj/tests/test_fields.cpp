#include <gtest/gtest.h>

#include <cmath>

#include "nsfv/fields.hpp"
#include "nsfv/operators.hpp"

using namespace nsfv;

TEST(Fields, ProjectLinearFunction) {
    const Mesh m(2, 2);
    const CellField f = project_cell(m, [](const Point& x) { return x[0]; });
    EXPECT_NEAR(f[m.cell_at({0, 0, 0})], 0.25, 1e-15);
    EXPECT_NEAR(f[m.cell_at({1, 0, 0})], 0.75, 1e-15);
    EXPECT_NEAR(f[m.cell_at({1, 1, 0})], 0.75, 1e-15);
}

TEST(Fields, Integrals) {
    const Mesh m(2, 2);
    EXPECT_DOUBLE_EQ(integrate_cells(CellField(m, 2.0)), 2.0);
    EXPECT_DOUBLE_EQ(integrate_cells(CellField(m, {1.0, 2.0, 3.0, 4.0})), 2.5);
    EXPECT_DOUBLE_EQ(integrate_dual(FaceField(m, 1.0)), 2.0);
}

TEST(Fields, ProjectionIsExactForCubics) {
    const Mesh m(2, 4);
    const auto f = [](const Point& x) { return x[0] * x[0] * x[0] + x[0] * x[1]; };
    const CellField p = project_cell(m, f);
    const double h = m.h();
    for (Index k = 0; k < m.cell_count(); ++k) {
        const auto c = m.coord(k);
        const double a = c[0] * h, b = a + h, y0 = c[1] * h, y1 = y0 + h;
        const double exact = ((std::pow(b, 4) - std::pow(a, 4)) / 4.0 * h
                              + (b * b - a * a) / 2.0 * (y1 * y1 - y0 * y0) / 2.0) / (h * h);
        EXPECT_NEAR(p[k], exact, 1e-14);
    }
}

TEST(Fields, FaceProjectionMatchesQuadrature) {
    // Dual cell of face (dir 0, cell K): [x_K, x_K + h] shifted by h/2 in x.
    const Mesh m(2, 4);
    const auto f = [](const Point& x) { return std::sin(2 * M_PI * x[0]) + x[1] * x[1]; };
    const FaceField q = project_face(m, f);
    const double h = m.h();
    const int nq = 400;
    for (Index k = 0; k < m.cell_count(); k += 5) {
        const auto c = m.coord(k);
        const double x0 = (c[0] + 0.5) * h, y0 = c[1] * h;
        double s = 0.0;
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j)
                s += f({x0 + (i + 0.5) * h / nq, y0 + (j + 0.5) * h / nq, 0.0});
        EXPECT_NEAR(q(0, k), s / (nq * nq), 1e-5);
    }
}

TEST(Fields, FaceProjectionOfCellFieldIsAverage) {
    const Mesh m(2, 2);
    const CellField r(m, {1.0, 2.0, 3.0, 4.0});
    const FaceField q = project_face(r);
    EXPECT_DOUBLE_EQ(q(0, 0), 1.5);
    EXPECT_DOUBLE_EQ(q(1, 0), 2.0);
    EXPECT_DOUBLE_EQ(q(0, 1), 1.5);  // periodic: cell 1 and cell 0
}

TEST(Fields, TraceAndFaceAlgebra) {
    const Mesh m(2, 2);
    const CellField r(m, {1.0, 3.0, 0.0, 0.0});
    const Trace t = face_trace(r, FaceId{0, 0});
    EXPECT_DOUBLE_EQ(t.in, 1.0);
    EXPECT_DOUBLE_EQ(t.out, 3.0);
    EXPECT_DOUBLE_EQ(avg(t), 2.0);
    EXPECT_DOUBLE_EQ(jump(t), 2.0);
}

TEST(Fields, DiscreteProductRule) {
    // jump(uv) = avg(u) jump(v) + jump(u) avg(v): u = (1,3), v = (2,4) gives 10.
    const Trace u{1.0, 3.0}, v{2.0, 4.0};
    const Trace uv{u.in * v.in, u.out * v.out};
    EXPECT_DOUBLE_EQ(jump(uv), 10.0);
    EXPECT_DOUBLE_EQ(avg(u) * jump(v) + jump(u) * avg(v), 10.0);
    EXPECT_DOUBLE_EQ(avg(uv) - avg(u) * avg(v), 0.25 * jump(u) * jump(v));
}

TEST(Fields, CellProjectionOfFaceFieldAveragesPair) {
    const Mesh m(2, 4);
    FaceField q(m);
    for (Index k = 0; k < m.cell_count(); ++k) q(0, k) = static_cast<double>(k);
    const CellField p = project_cell(q, 0);
    for (Index k = 0; k < m.cell_count(); ++k)
        EXPECT_DOUBLE_EQ(p[k], 0.5 * (q(0, k) + q(0, m.neighbor(k, 0, -1))));
}

TEST(Fields, NormsAndArithmetic) {
    const Mesh m(2, 2);
    CellField a(m, {1.0, -2.0, 3.0, -4.0});
    EXPECT_DOUBLE_EQ(a.min(), -4.0);
    EXPECT_DOUBLE_EQ(a.max(), 3.0);
    EXPECT_DOUBLE_EQ(a.max_abs(), 4.0);
    EXPECT_DOUBLE_EQ(l1_norm(a), 2.5);
    EXPECT_DOUBLE_EQ(l2_norm(a), std::sqrt(30.0 / 4.0));
    const CellField b = 2.0 * a - a;
    EXPECT_EQ(b, a);
    const CellField c = hadamard(a, a);
    EXPECT_DOUBLE_EQ(c[3], 16.0);
}

TEST(Fields, SumFacesCoversAllDirections) {
    const Mesh m(3, 2);
    EXPECT_DOUBLE_EQ(sum_faces(m, [](FaceId) { return 1.0; }), 3.0 * 8.0 * 0.25);
}

TEST(Fields, FaceProjectionOfLinearFunctionWraps) {
    const Mesh m(2, 2);
    const FaceField q = project_face(m, [](const Point& x) { return x[0]; });
    EXPECT_NEAR(q(0, m.cell_at({0, 0, 0})), 0.5, 1e-15);
    EXPECT_NEAR(q(0, m.cell_at({1, 0, 0})), 0.5, 1e-15);
    EXPECT_NEAR(q(1, m.cell_at({1, 0, 0})), 0.75, 1e-15);
}

TEST(Fields, ProjectionOfSineHasZeroMean) {
    for (Index n : {3, 8, 17}) {
        const Mesh m(2, n);
        const CellField f = project_cell(m, [](const Point& x) { return std::sin(2 * M_PI * x[0]); });
        EXPECT_NEAR(integrate_cells(f), 0.0, 1e-14);
    }
}
