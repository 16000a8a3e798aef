#include <gtest/gtest.h>

#include "nsfv/errors.hpp"
#include "nsfv/mesh.hpp"

using namespace nsfv;

TEST(Mesh, CountsAndSizes) {
    const Mesh m2(2, 4);
    EXPECT_EQ(m2.cell_count(), 16);
    EXPECT_EQ(m2.face_count(), 32);
    EXPECT_DOUBLE_EQ(m2.h(), 0.25);
    EXPECT_DOUBLE_EQ(m2.cell_volume(), 0.0625);
    EXPECT_DOUBLE_EQ(m2.face_area(), 0.25);

    const Mesh m3(3, 4, 2.0);
    EXPECT_EQ(m3.cell_count(), 64);
    EXPECT_EQ(m3.face_count(), 192);
    EXPECT_DOUBLE_EQ(m3.h(), 0.5);
    EXPECT_DOUBLE_EQ(m3.cell_volume(), 0.125);
    EXPECT_DOUBLE_EQ(m3.face_area(), 0.25);
}

TEST(Mesh, FaceNeighborsRightOfOrigin) {
    const Mesh m(2, 2);
    const auto f = m.face_neighbors(FaceId{0, m.cell_at({0, 0, 0})});
    EXPECT_EQ(f.in, m.cell_at({0, 0, 0}));
    EXPECT_EQ(f.out, m.cell_at({1, 0, 0}));
    EXPECT_EQ(f.dir, 0);
}

TEST(Mesh, LeftFaceOfOriginWraps) {
    const Mesh m(2, 2);
    const FaceId left = m.face_of(m.cell_at({0, 0, 0}), 0, -1);
    const auto f = m.face_neighbors(left);
    EXPECT_EQ(f.in, m.cell_at({1, 0, 0}));
    EXPECT_EQ(f.out, m.cell_at({0, 0, 0}));
}

TEST(Mesh, TopFaceWrapsInY) {
    const Mesh m(2, 4);
    const auto f = m.face_neighbors(FaceId{1, m.cell_at({3, 3, 0})});
    EXPECT_EQ(f.out, m.cell_at({3, 0, 0}));
}

TEST(Mesh, RejectsBadArguments) {
    EXPECT_THROW(Mesh(2, 1), InvalidArgument);
    EXPECT_THROW(Mesh(1, 4), InvalidArgument);
    EXPECT_THROW(Mesh(4, 4), InvalidArgument);
    EXPECT_THROW(Mesh(2, 4, std::vector<double>{1.0, 2.0}), InvalidArgument);
    const Mesh m(2, 4);
    EXPECT_THROW((void)m.face_neighbors(FaceId{2, 0}), InvalidArgument);
    EXPECT_THROW((void)m.face_neighbors(FaceId{0, 16}), InvalidArgument);
}

TEST(Mesh, CoordRoundTripAndCenters) {
    const Mesh m(3, 3);
    for (Index k = 0; k < m.cell_count(); ++k) EXPECT_EQ(m.cell_at(m.coord(k)), k);
    EXPECT_EQ(m.cell_at({-1, 0, 0}), m.cell_at({2, 0, 0}));
    const Point c = m.cell_center(m.cell_at({1, 2, 0}));
    EXPECT_DOUBLE_EQ(c[0], 0.5);
    EXPECT_DOUBLE_EQ(c[1], 2.5 / 3.0);
    const Point fc = m.face_center(FaceId{0, m.cell_at({1, 2, 0})});
    EXPECT_DOUBLE_EQ(fc[0], 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(fc[1], 2.5 / 3.0);
}

TEST(Mesh, StencilSweepMatchesNeighbor) {
    for (int dim : {2, 3}) {
        const Mesh m(dim, 3);
        for (int d = 0; d < dim; ++d) {
            Index visited = 0;
            m.for_each_stencil(d, [&](Index k, Index lo, Index up) {
                EXPECT_EQ(lo, m.neighbor(k, d, -1));
                EXPECT_EQ(up, m.neighbor(k, d, +1));
                ++visited;
            });
            EXPECT_EQ(visited, m.cell_count());
        }
    }
}

TEST(Mesh, EveryCellHasTwoFacesPerDirection) {
    const Mesh m(2, 4);
    std::vector<int> touches(static_cast<std::size_t>(m.cell_count()), 0);
    for (int d = 0; d < 2; ++d)
        for (Index k = 0; k < m.cell_count(); ++k) {
            const auto f = m.face_neighbors(FaceId{d, k});
            ++touches[static_cast<std::size_t>(f.in)];
            ++touches[static_cast<std::size_t>(f.out)];
        }
    for (int t : touches) EXPECT_EQ(t, 4);
}
