#pragma once

#include "nsfv/fields.hpp"
#include "nsfv/thermo.hpp"

namespace nsfv {

/// One time level of the discrete solution.
struct State {
    CellField rho;
    CellVectorField u;
    CellField theta;
    double time = 0.0;
    int step = 0;

    [[nodiscard]] const Mesh& mesh() const noexcept { return rho.mesh(); }
    [[nodiscard]] CellField pressure() const { return hadamard(rho, theta); }
    [[nodiscard]] CellField entropy(const GasParams& gas) const;
    /// rho u_i
    [[nodiscard]] CellField momentum(int i) const { return hadamard(rho, u[i]); }

    /// Throws PositivityLoss if rho or theta has a nonpositive or non-finite entry.
    void check_positivity() const;
};

}  // namespace nsfv
