#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nsfv/mesh.hpp"

namespace nsfv {

using ScalarFunction = std::function<double(const Point&)>;

/// Piecewise-constant scalar on the primal cells (the space Q_h).
class CellField {
public:
    CellField() = default;
    explicit CellField(const Mesh& mesh, double value = 0.0)
        : mesh_(mesh), values_(static_cast<std::size_t>(mesh.cell_count()), value) {}
    CellField(const Mesh& mesh, std::vector<double> values);

    [[nodiscard]] const Mesh& mesh() const noexcept { return mesh_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    double& operator[](Index k) noexcept { return values_[static_cast<std::size_t>(k)]; }
    double operator[](Index k) const noexcept { return values_[static_cast<std::size_t>(k)]; }

    [[nodiscard]] std::span<double> values() noexcept { return values_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

    [[nodiscard]] double min() const;
    [[nodiscard]] double max() const;
    [[nodiscard]] double max_abs() const;
    [[nodiscard]] bool all_finite() const;

    CellField& operator+=(const CellField& o);
    CellField& operator-=(const CellField& o);
    CellField& operator*=(double a);

    friend bool operator==(const CellField&, const CellField&) = default;

private:
    Mesh mesh_{2, 2};
    std::vector<double> values_;
};

CellField operator+(CellField a, const CellField& b);
CellField operator-(CellField a, const CellField& b);
CellField operator*(double a, CellField b);
/// Pointwise product.
CellField hadamard(const CellField& a, const CellField& b);

/// One CellField per velocity component.
class CellVectorField {
public:
    CellVectorField() = default;
    explicit CellVectorField(const Mesh& mesh, double value = 0.0);
    explicit CellVectorField(std::vector<CellField> components);

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(comp_.size()); }
    [[nodiscard]] const Mesh& mesh() const noexcept { return comp_.front().mesh(); }

    CellField& operator[](int i) noexcept { return comp_[static_cast<std::size_t>(i)]; }
    const CellField& operator[](int i) const noexcept { return comp_[static_cast<std::size_t>(i)]; }

    [[nodiscard]] double max_norm() const;  // max over cells of the Euclidean norm
    [[nodiscard]] bool all_finite() const;

    friend bool operator==(const CellVectorField&, const CellVectorField&) = default;

private:
    std::vector<CellField> comp_;
};

/// Per-cell d x d matrix, component (i,j) stored row-major.
class CellTensorField {
public:
    explicit CellTensorField(const Mesh& mesh);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    CellField& operator()(int i, int j) noexcept { return comp_[static_cast<std::size_t>(i * dim_ + j)]; }
    const CellField& operator()(int i, int j) const noexcept {
        return comp_[static_cast<std::size_t>(i * dim_ + j)];
    }

private:
    int dim_;
    std::vector<CellField> comp_;
};

/// Piecewise-constant data on the dual cells, one array per direction (the space W_h).
/// Entry (dir, k) belongs to the face on the upper side of cell k in direction dir.
class FaceField {
public:
    FaceField() = default;
    explicit FaceField(const Mesh& mesh, double value = 0.0);

    [[nodiscard]] const Mesh& mesh() const noexcept { return mesh_; }

    double& operator()(int dir, Index k) noexcept {
        return values_[static_cast<std::size_t>(dir)][static_cast<std::size_t>(k)];
    }
    double operator()(int dir, Index k) const noexcept {
        return values_[static_cast<std::size_t>(dir)][static_cast<std::size_t>(k)];
    }
    double& operator[](FaceId f) noexcept { return (*this)(f.dir, f.cell); }
    double operator[](FaceId f) const noexcept { return (*this)(f.dir, f.cell); }

    [[nodiscard]] std::span<const double> direction(int dir) const noexcept {
        return values_[static_cast<std::size_t>(dir)];
    }
    [[nodiscard]] bool all_finite() const;

private:
    Mesh mesh_{2, 2};
    std::array<std::vector<double>, 3> values_;
};

/// Values of a cell field on both sides of a face, under the mesh orientation.
struct Trace {
    double in = 0.0;
    double out = 0.0;
};

[[nodiscard]] constexpr double avg(Trace t) noexcept { return 0.5 * (t.in + t.out); }
[[nodiscard]] constexpr double jump(Trace t) noexcept { return t.out - t.in; }

[[nodiscard]] Trace face_trace(const CellField& field, FaceId face);

/// Unchecked trace for inner loops.
[[nodiscard]] inline Trace trace(const CellField& f, int dir, Index k) noexcept {
    return Trace{f[k], f[f.mesh().neighbor(k, dir, +1)]};
}

/// Cell means of f, tensor 3-point Gauss per cell. Sample points are wrapped onto the torus.
[[nodiscard]] CellField project_cell(const Mesh& mesh, const ScalarFunction& f);
[[nodiscard]] CellVectorField project_cell(const Mesh& mesh, std::span<const ScalarFunction> f);

/// Dual-cell means of f; each half D_{sigma,K}, D_{sigma,L} gets its own tensor Gauss rule.
[[nodiscard]] FaceField project_face(const Mesh& mesh, const ScalarFunction& f);

/// Pi_E of a piecewise constant: the two half cells give the face average.
[[nodiscard]] FaceField project_face(const CellField& r);

/// Pi_T of a dual-grid function: each cell overlaps half of its two dual cells per direction.
[[nodiscard]] CellField project_cell(const FaceField& q, int dir);

/// Sum_K |K| v_K.
[[nodiscard]] double integrate_cells(const CellField& f);
/// Sum over dual cells of all directions: Sum_sigma |D_sigma| q_sigma.
[[nodiscard]] double integrate_dual(const FaceField& q);
/// Sum_sigma |sigma| expr(sigma) over every face of every direction.
[[nodiscard]] double sum_faces(const Mesh& mesh, const std::function<double(FaceId)>& expr);

/// Discrete L^p norms over Omega.
[[nodiscard]] double l1_norm(const CellField& f);
[[nodiscard]] double l2_norm(const CellField& f);
[[nodiscard]] double l2_norm(const CellVectorField& v);

}  // namespace nsfv
