#pragma once

#include <span>
#include <vector>

#include "nsfv/fields.hpp"

namespace nsfv {

/// Artificial diffusion exponent and mesh size of the diffusive upwind flux.
class FluxParams {
public:
    /// Throws InvalidArgument unless 0 < epsilon < 1 and h > 0.
    FluxParams(double epsilon, double h);

    [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    /// h^epsilon, the coefficient multiplying the jump.
    [[nodiscard]] double diffusion() const noexcept { return diffusion_; }

private:
    double epsilon_;
    double h_;
    double diffusion_;
};

[[nodiscard]] constexpr double positive_part(double f) noexcept { return f > 0.0 ? f : 0.0; }
[[nodiscard]] constexpr double negative_part(double f) noexcept { return f < 0.0 ? f : 0.0; }

/// Upwind flux r_in [u_n]^+ + r_out [u_n]^-, u_n the face-normal average velocity.
[[nodiscard]] constexpr double upwind(double r_in, double r_out, double ubar_n) noexcept {
    return r_in * positive_part(ubar_n) + r_out * negative_part(ubar_n);
}

/// Donor-cell value r^up: r_in for u_n >= 0, r_out otherwise.
[[nodiscard]] constexpr double upwind_value(double r_in, double r_out, double ubar_n) noexcept {
    return ubar_n >= 0.0 ? r_in : r_out;
}

/// F_h = Up[r, u] - h^eps jump(r).
[[nodiscard]] inline double diffusive_flux(double r_in, double r_out, double ubar_n, const FluxParams& p) noexcept {
    return upwind(r_in, r_out, ubar_n) - p.diffusion() * (r_out - r_in);
}

/// Componentwise F_h for a vector quantity (momentum).
[[nodiscard]] std::vector<double> vector_flux(std::span<const double> r_in, std::span<const double> r_out,
                                              double ubar_n, const FluxParams& p);

/// avg(u).n on every face (the advecting velocity of the upwind flux).
[[nodiscard]] FaceField face_normal_velocity(const CellVectorField& u);

/// F_h(r, u) on every face, oriented along +e_dir; `ubar` from face_normal_velocity.
[[nodiscard]] FaceField flux_field(const CellField& r, const FaceField& ubar, const FluxParams& p);

/// Up[r, u] on every face (no artificial diffusion).
[[nodiscard]] FaceField upwind_field(const CellField& r, const FaceField& ubar);

}  // namespace nsfv
