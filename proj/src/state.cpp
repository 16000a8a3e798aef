#include "nsfv/state.hpp"

#include <cmath>
#include <sstream>

#include "nsfv/errors.hpp"

namespace nsfv {

CellField State::entropy(const GasParams& gas) const {
    CellField s(mesh());
    for (Index k = 0; k < mesh().cell_count(); ++k) s[k] = nsfv::entropy(gas, rho[k], theta[k]);
    return s;
}

void State::check_positivity() const {
    for (Index k = 0; k < mesh().cell_count(); ++k) {
        const bool bad_rho = !(rho[k] > 0.0) || !std::isfinite(rho[k]);
        const bool bad_theta = !(theta[k] > 0.0) || !std::isfinite(theta[k]);
        if (bad_rho || bad_theta) {
            std::ostringstream os;
            os << (bad_rho ? "density" : "temperature") << " lost positivity in cell " << k << " (rho=" << rho[k]
               << ", theta=" << theta[k] << ") at step " << step;
            throw PositivityLoss(os.str());
        }
    }
    if (!u.all_finite()) throw PositivityLoss("velocity became non-finite at step " + std::to_string(step));
}

}  // namespace nsfv
