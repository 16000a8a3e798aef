#include "nsfv/flux.hpp"

#include <cmath>

#include "nsfv/errors.hpp"

namespace nsfv {

FluxParams::FluxParams(double epsilon, double h) : epsilon_(epsilon), h_(h), diffusion_(0.0) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0,1)");
    if (!(h > 0.0)) throw InvalidArgument("flux mesh size must be positive");
    diffusion_ = std::pow(h, epsilon);
}

std::vector<double> vector_flux(std::span<const double> r_in, std::span<const double> r_out, double ubar_n,
                                const FluxParams& p) {
    if (r_in.size() != r_out.size()) throw InvalidArgument("vector_flux: trace sizes differ");
    std::vector<double> f(r_in.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = diffusive_flux(r_in[i], r_out[i], ubar_n, p);
    return f;
}

}  // namespace nsfv

namespace nsfv {

FaceField face_normal_velocity(const CellVectorField& u) {
    const Mesh& mesh = u.mesh();
    FaceField q(mesh);
    for (int d = 0; d < mesh.dim(); ++d) {
        mesh.for_each_stencil(d, [&](Index k, Index, Index up) { q(d, k) = avg({u[d][k], u[d][up]}); });
    }
    return q;
}

FaceField flux_field(const CellField& r, const FaceField& ubar, const FluxParams& p) {
    const Mesh& mesh = r.mesh();
    FaceField f(mesh);
    for (int d = 0; d < mesh.dim(); ++d) {
        mesh.for_each_stencil(d, [&](Index k, Index, Index up) {
            f(d, k) = diffusive_flux(r[k], r[up], ubar(d, k), p);
        });
    }
    return f;
}

FaceField upwind_field(const CellField& r, const FaceField& ubar) {
    const Mesh& mesh = r.mesh();
    FaceField f(mesh);
    for (int d = 0; d < mesh.dim(); ++d) {
        mesh.for_each_stencil(d, [&](Index k, Index, Index up) { f(d, k) = upwind(r[k], r[up], ubar(d, k)); });
    }
    return f;
}

}  // namespace nsfv
