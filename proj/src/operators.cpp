#include "nsfv/operators.hpp"

#include <vector>

#include "nsfv/reduce.hpp"

namespace nsfv {

namespace {

CellField central_diff(const CellField& r, int dir) {
    const Mesh& mesh = r.mesh();
    CellField out(mesh);
    const double c = 0.5 / mesh.h();
    mesh.for_each_stencil(dir, [&](Index k, Index lo, Index up) { out[k] = c * (r[up] - r[lo]); });
    return out;
}

}  // namespace

CellVectorField grad_h(const CellField& r) {
    std::vector<CellField> comps;
    for (int d = 0; d < r.mesh().dim(); ++d) comps.push_back(central_diff(r, d));
    return CellVectorField(std::move(comps));
}

CellField div_h(const CellVectorField& v) {
    CellField out(v.mesh());
    for (int d = 0; d < v.dim(); ++d) out += central_diff(v[d], d);
    return out;
}

CellTensorField grad_h(const CellVectorField& v) {
    CellTensorField g(v.mesh());
    for (int i = 0; i < v.dim(); ++i) {
        for (int j = 0; j < v.dim(); ++j) g(i, j) = central_diff(v[i], j);
    }
    return g;
}

CellVectorField div_h(const CellTensorField& m) {
    const Mesh& mesh = m(0, 0).mesh();
    CellVectorField out(mesh);
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) out[i] += central_diff(m(i, j), j);
    }
    return out;
}

CellTensorField sym_grad(const CellVectorField& v) {
    const CellTensorField g = grad_h(v);
    CellTensorField s(v.mesh());
    const Index n = v.mesh().cell_count();
    for (int i = 0; i < v.dim(); ++i) {
        for (int j = 0; j < v.dim(); ++j) {
            for (Index k = 0; k < n; ++k) s(i, j)[k] = 0.5 * (g(i, j)[k] + g(j, i)[k]);
        }
    }
    return s;
}

CellField trace(const CellTensorField& m) {
    CellField out(m(0, 0).mesh());
    for (int i = 0; i < m.dim(); ++i) out += m(i, i);
    return out;
}

CellField double_dot(const CellTensorField& a, const CellTensorField& b) {
    CellField out(a(0, 0).mesh());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) out += hadamard(a(i, j), b(i, j));
    }
    return out;
}

FaceField grad_edge(const CellField& r) {
    const Mesh& mesh = r.mesh();
    FaceField q(mesh);
    const double inv_h = 1.0 / mesh.h();
    for (int d = 0; d < mesh.dim(); ++d) {
        mesh.for_each_stencil(d, [&](Index k, Index, Index up) { q(d, k) = inv_h * (r[up] - r[k]); });
    }
    return q;
}

CellField dual_diff(const FaceField& q, int dir) {
    const Mesh& mesh = q.mesh();
    CellField out(mesh);
    const double inv_h = 1.0 / mesh.h();
    mesh.for_each_stencil(dir, [&](Index k, Index lo, Index) { out[k] = inv_h * (q(dir, k) - q(dir, lo)); });
    return out;
}

CellField div_dual(const FaceField& q) {
    CellField out(q.mesh());
    for (int d = 0; d < q.mesh().dim(); ++d) out += dual_diff(q, d);
    return out;
}

CellField laplace_h(const CellField& r) {
    const Mesh& mesh = r.mesh();
    CellField out(mesh);
    const double c = 1.0 / (mesh.h() * mesh.h());
    for (int d = 0; d < mesh.dim(); ++d) {
        mesh.for_each_stencil(d, [&](Index k, Index lo, Index up) { out[k] += (r[up] - r[k]) + (r[lo] - r[k]); });
    }
    out *= c;
    return out;
}

double dual_inner(const FaceField& a, const FaceField& b) {
    const Mesh& mesh = a.mesh();
    std::vector<double> buf;
    buf.reserve(static_cast<std::size_t>(mesh.face_count()));
    for (int d = 0; d < mesh.dim(); ++d) {
        for (Index k = 0; k < mesh.cell_count(); ++k) buf.push_back(a(d, k) * b(d, k));
    }
    return mesh.dual_volume() * pairwise_sum(buf);
}

}  // namespace nsfv
