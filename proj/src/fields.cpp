#include "nsfv/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nsfv/errors.hpp"
#include "nsfv/reduce.hpp"

namespace nsfv {

namespace {

// 3-point Gauss-Legendre on [-1/2, 1/2], exact for quintics in each direction.
constexpr std::array<double, 3> kGaussNodes{-0.38729833462074170, 0.0, 0.38729833462074170};
constexpr std::array<double, 3> kGaussWeights{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

double wrap(double x, double length) {
    double y = std::fmod(x, length);
    if (y < 0.0) y += length;
    return y;
}

/// Mean of f over the box centered at `center` with per-axis widths `width`.
double box_mean(const Mesh& mesh, const ScalarFunction& f, const Point& center, const Point& width) {
    const int dim = mesh.dim();
    const int nz = dim == 3 ? 3 : 1;
    double sum = 0.0;
    for (int c = 0; c < nz; ++c) {
        for (int b = 0; b < 3; ++b) {
            for (int a = 0; a < 3; ++a) {
                Point x{center[0] + kGaussNodes[static_cast<std::size_t>(a)] * width[0],
                        center[1] + kGaussNodes[static_cast<std::size_t>(b)] * width[1], 0.0};
                double w = kGaussWeights[static_cast<std::size_t>(a)] * kGaussWeights[static_cast<std::size_t>(b)];
                if (dim == 3) {
                    x[2] = center[2] + kGaussNodes[static_cast<std::size_t>(c)] * width[2];
                    w *= kGaussWeights[static_cast<std::size_t>(c)];
                }
                for (int d = 0; d < dim; ++d) {
                    x[static_cast<std::size_t>(d)] = wrap(x[static_cast<std::size_t>(d)], mesh.length());
                }
                const double v = f(x);
                if (!std::isfinite(v)) throw InvalidArgument("projection: non-finite function sample");
                sum += w * v;
            }
        }
    }
    return sum;
}

}  // namespace

CellField::CellField(const Mesh& mesh, std::vector<double> values) : mesh_(mesh), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(mesh.cell_count())) {
        throw InvalidArgument("CellField: value count does not match the mesh");
    }
}

double CellField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double CellField::max() const { return *std::max_element(values_.begin(), values_.end()); }

double CellField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool CellField::all_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

CellField& CellField::operator+=(const CellField& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
}

CellField& CellField::operator-=(const CellField& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
    return *this;
}

CellField& CellField::operator*=(double a) {
    for (double& v : values_) v *= a;
    return *this;
}

CellField operator+(CellField a, const CellField& b) { return a += b; }
CellField operator-(CellField a, const CellField& b) { return a -= b; }
CellField operator*(double a, CellField b) { return b *= a; }

CellField hadamard(const CellField& a, const CellField& b) {
    CellField r(a.mesh());
    for (Index k = 0; k < a.mesh().cell_count(); ++k) r[k] = a[k] * b[k];
    return r;
}

CellVectorField::CellVectorField(const Mesh& mesh, double value)
    : comp_(static_cast<std::size_t>(mesh.dim()), CellField(mesh, value)) {}

CellVectorField::CellVectorField(std::vector<CellField> components) : comp_(std::move(components)) {
    if (comp_.empty() || static_cast<int>(comp_.size()) != comp_.front().mesh().dim()) {
        throw InvalidArgument("CellVectorField: component count must equal the mesh dimension");
    }
}

double CellVectorField::max_norm() const {
    double m = 0.0;
    const Index n = mesh().cell_count();
    for (Index k = 0; k < n; ++k) {
        double s = 0.0;
        for (const auto& c : comp_) s += c[k] * c[k];
        m = std::max(m, s);
    }
    return std::sqrt(m);
}

bool CellVectorField::all_finite() const {
    return std::all_of(comp_.begin(), comp_.end(), [](const CellField& c) { return c.all_finite(); });
}

CellTensorField::CellTensorField(const Mesh& mesh)
    : dim_(mesh.dim()), comp_(static_cast<std::size_t>(dim_ * dim_), CellField(mesh)) {}

FaceField::FaceField(const Mesh& mesh, double value) : mesh_(mesh) {
    for (int d = 0; d < mesh.dim(); ++d) {
        values_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(mesh.face_count_per_dir()), value);
    }
}

bool FaceField::all_finite() const {
    for (const auto& v : values_) {
        if (!std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); })) return false;
    }
    return true;
}

Trace face_trace(const CellField& field, FaceId face) {
    const FaceCells fc = field.mesh().face_neighbors(face);
    return Trace{field[fc.in], field[fc.out]};
}

CellField project_cell(const Mesh& mesh, const ScalarFunction& f) {
    CellField r(mesh);
    const double h = mesh.h();
    const Point width{h, h, h};
    for (Index k = 0; k < mesh.cell_count(); ++k) r[k] = box_mean(mesh, f, mesh.cell_center(k), width);
    return r;
}

CellVectorField project_cell(const Mesh& mesh, std::span<const ScalarFunction> f) {
    if (static_cast<int>(f.size()) != mesh.dim()) {
        throw InvalidArgument("project_cell: need one function per component");
    }
    std::vector<CellField> comps;
    for (const auto& fi : f) comps.push_back(project_cell(mesh, fi));
    return CellVectorField(std::move(comps));
}

FaceField project_face(const Mesh& mesh, const ScalarFunction& f) {
    FaceField q(mesh);
    const double h = mesh.h();
    for (int d = 0; d < mesh.dim(); ++d) {
        Point width{h, h, h};
        width[static_cast<std::size_t>(d)] = 0.5 * h;
        for (Index k = 0; k < mesh.cell_count(); ++k) {
            const Point xs = mesh.face_center(FaceId{d, k});
            Point lo = xs;
            Point hi = xs;
            lo[static_cast<std::size_t>(d)] -= 0.25 * h;
            hi[static_cast<std::size_t>(d)] += 0.25 * h;
            q(d, k) = 0.5 * (box_mean(mesh, f, lo, width) + box_mean(mesh, f, hi, width));
        }
    }
    return q;
}

FaceField project_face(const CellField& r) {
    const Mesh& mesh = r.mesh();
    FaceField q(mesh);
    for (int d = 0; d < mesh.dim(); ++d) {
        mesh.for_each_stencil(d, [&](Index k, Index, Index up) { q(d, k) = avg({r[k], r[up]}); });
    }
    return q;
}

CellField project_cell(const FaceField& q, int dir) {
    const Mesh& mesh = q.mesh();
    CellField r(mesh);
    mesh.for_each_stencil(dir, [&](Index k, Index lo, Index) { r[k] = 0.5 * (q(dir, k) + q(dir, lo)); });
    return r;
}

double integrate_cells(const CellField& f) { return f.mesh().cell_volume() * pairwise_sum(f.values()); }

double integrate_dual(const FaceField& q) {
    double s = 0.0;
    for (int d = 0; d < q.mesh().dim(); ++d) s += pairwise_sum(q.direction(d));
    return q.mesh().dual_volume() * s;
}

double sum_faces(const Mesh& mesh, const std::function<double(FaceId)>& expr) {
    std::vector<double> buf(static_cast<std::size_t>(mesh.face_count()));
    std::size_t i = 0;
    for (int d = 0; d < mesh.dim(); ++d) {
        for (Index k = 0; k < mesh.cell_count(); ++k) buf[i++] = expr(FaceId{d, k});
    }
    return mesh.face_area() * pairwise_sum(buf);
}

double l1_norm(const CellField& f) {
    std::vector<double> a(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) a[k] = std::abs(f.values()[k]);
    return f.mesh().cell_volume() * pairwise_sum(a);
}

double l2_norm(const CellField& f) {
    std::vector<double> a(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) a[k] = f.values()[k] * f.values()[k];
    return std::sqrt(f.mesh().cell_volume() * pairwise_sum(a));
}

double l2_norm(const CellVectorField& v) {
    double s = 0.0;
    for (int i = 0; i < v.dim(); ++i) {
        const double n = l2_norm(v[i]);
        s += n * n;
    }
    return std::sqrt(s);
}

}  // namespace nsfv
