#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace nsfv {

using Index = std::ptrdiff_t;
using Point = std::array<double, 3>;

/// Integer coordinates of a cell; unused trailing entries are 0.
using CellCoord = std::array<Index, 3>;

/// A face is identified by its normal direction and the cell on its lower
/// side (the "in" cell K of the oriented pair K|L with x_L = x_K + h e_dir).
struct FaceId {
    int dir = 0;
    Index cell = 0;

    friend bool operator==(const FaceId&, const FaceId&) = default;
};

/// Oriented pair of cells sharing a face.
struct FaceCells {
    Index in = 0;   // K
    Index out = 0;  // L
    int dir = 0;
};

/// Uniform periodic Cartesian grid on the torus [0,L)^dim.
///
/// Cells are numbered lexicographically with x running fastest. The mesh is
/// immutable once built and small enough to copy by value; all topology is
/// computed arithmetically.
class Mesh {
public:
    /// Throws InvalidArgument for dim not in {2,3}, n < 2 or non-uniform extents.
    Mesh(int dim, Index n, std::vector<double> lengths);
    Mesh(int dim, Index n, double length = 1.0);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] Index cells_per_dim() const noexcept { return n_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] double length() const noexcept { return length_; }
    [[nodiscard]] Index cell_count() const noexcept { return cell_count_; }
    [[nodiscard]] Index face_count_per_dir() const noexcept { return cell_count_; }
    [[nodiscard]] Index face_count() const noexcept { return cell_count_ * dim_; }

    [[nodiscard]] double cell_volume() const noexcept { return volume_; }
    [[nodiscard]] double face_area() const noexcept { return area_; }
    /// |D_sigma|, equal to the cell volume on a uniform grid.
    [[nodiscard]] double dual_volume() const noexcept { return volume_; }

    [[nodiscard]] CellCoord coord(Index cell) const noexcept;
    [[nodiscard]] Index cell_at(const CellCoord& c) const noexcept;  // wraps periodically

    /// Neighbor of `cell` one step in direction `dir`, `step` in {-1,+1} (periodic).
    [[nodiscard]] Index neighbor(Index cell, int dir, int step) const noexcept {
        const Index s = stride_[static_cast<std::size_t>(dir)];
        const Index i = (cell / s) % n_;
        Index j = i + step;
        if (j < 0) j += n_;
        else if (j >= n_) j -= n_;
        return cell + (j - i) * s;
    }

    /// Calls f(cell, lower, upper) for every cell with its periodic neighbours along `dir`.
    template <class F>
    void for_each_stencil(int dir, F&& f) const {
        const Index s = stride_[static_cast<std::size_t>(dir)];
        const Index block = s * n_;
        for (Index base = 0; base < cell_count_; base += block) {
            for (Index i = 0; i < n_; ++i) {
                const Index row = base + i * s;
                const Index up = i + 1 == n_ ? base : row + s;
                const Index lo = i == 0 ? base + (n_ - 1) * s : row - s;
                for (Index j = 0; j < s; ++j) f(row + j, lo + j, up + j);
            }
        }
    }

    [[nodiscard]] Point cell_center(Index cell) const noexcept;
    [[nodiscard]] Point face_center(FaceId face) const noexcept;

    /// Oriented (K, L, dir) for a face; throws InvalidArgument on a bad id.
    [[nodiscard]] FaceCells face_neighbors(FaceId face) const;

    /// The face of `cell` on its upper (`side`=+1) or lower (`side`=-1) side in direction `dir`.
    [[nodiscard]] FaceId face_of(Index cell, int dir, int side) const noexcept {
        return side > 0 ? FaceId{dir, cell} : FaceId{dir, neighbor(cell, dir, -1)};
    }

    friend bool operator==(const Mesh& a, const Mesh& b) noexcept {
        return a.dim_ == b.dim_ && a.n_ == b.n_ && a.length_ == b.length_;
    }

private:
    int dim_;
    Index n_;
    double length_;
    double h_;
    Index cell_count_;
    double volume_;
    double area_;
    std::array<Index, 3> stride_{};
};

}  // namespace nsfv
