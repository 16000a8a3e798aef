#include "nsfv/mesh.hpp"

#include <cmath>
#include <string>

#include "nsfv/errors.hpp"

namespace nsfv {

Mesh::Mesh(int dim, Index n, std::vector<double> lengths)
    : dim_(dim), n_(n), length_(0.0), h_(0.0), cell_count_(0), volume_(0.0), area_(0.0) {
    if (dim != 2 && dim != 3) {
        throw InvalidArgument("mesh dimension must be 2 or 3, got " + std::to_string(dim));
    }
    if (n < 2) {
        throw InvalidArgument("mesh needs at least 2 cells per direction, got " + std::to_string(n));
    }
    if (lengths.size() != static_cast<std::size_t>(dim)) {
        throw InvalidArgument("mesh extents must have one entry per dimension");
    }
    for (double l : lengths) {
        if (!(l > 0.0) || !std::isfinite(l)) throw InvalidArgument("mesh extents must be positive");
        if (l != lengths.front()) {
            throw InvalidArgument("only uniform square/cube cells are supported; extents must be equal");
        }
    }
    length_ = lengths.front();
    h_ = length_ / static_cast<double>(n);
    cell_count_ = 1;
    for (int d = 0; d < dim; ++d) {
        stride_[static_cast<std::size_t>(d)] = cell_count_;
        cell_count_ *= n;
    }
    volume_ = std::pow(h_, dim);
    area_ = std::pow(h_, dim - 1);
}

Mesh::Mesh(int dim, Index n, double length)
    : Mesh(dim, n, std::vector<double>(static_cast<std::size_t>(dim > 0 && dim < 4 ? dim : 1), length)) {}

CellCoord Mesh::coord(Index cell) const noexcept {
    CellCoord c{0, 0, 0};
    for (int d = 0; d < dim_; ++d) {
        c[static_cast<std::size_t>(d)] = cell % n_;
        cell /= n_;
    }
    return c;
}

Index Mesh::cell_at(const CellCoord& c) const noexcept {
    Index id = 0;
    for (int d = dim_ - 1; d >= 0; --d) {
        Index i = c[static_cast<std::size_t>(d)] % n_;
        if (i < 0) i += n_;
        id = id * n_ + i;
    }
    return id;
}

Point Mesh::cell_center(Index cell) const noexcept {
    const CellCoord c = coord(cell);
    Point x{0.0, 0.0, 0.0};
    for (int d = 0; d < dim_; ++d) {
        x[static_cast<std::size_t>(d)] = (static_cast<double>(c[static_cast<std::size_t>(d)]) + 0.5) * h_;
    }
    return x;
}

Point Mesh::face_center(FaceId face) const noexcept {
    Point x = cell_center(face.cell);
    x[static_cast<std::size_t>(face.dir)] += 0.5 * h_;
    return x;
}

FaceCells Mesh::face_neighbors(FaceId face) const {
    if (face.dir < 0 || face.dir >= dim_ || face.cell < 0 || face.cell >= cell_count_) {
        throw InvalidArgument("invalid face id (dir=" + std::to_string(face.dir) +
                              ", cell=" + std::to_string(face.cell) + ")");
    }
    return FaceCells{face.cell, neighbor(face.cell, face.dir, +1), face.dir};
}

}  // namespace nsfv
