#include <numbers>
#include <stdexcept>

#include "starcore/energy.hpp"
#include "starcore/structure.hpp"

namespace starcore::structure {

Profile build_profile(const ModelParams& params, const SolarConstants& constants,
                      const std::vector<double>& grid, const ProfileOptions& options) {
    params.validate();
    constants.validate();
    if (grid.empty()) throw std::invalid_argument("build_profile: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
            throw std::invalid_argument("build_profile: grid values must lie in [0,1]");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("build_profile: grid must be strictly increasing");
        }
    }

    energy::EnergyParams eparams;
    if (options.luminosity_n) {
        eparams.n = *options.luminosity_n;
        eparams.m = 1;
        eparams.epsilon0 = options.epsilon0;
        eparams.validate();
    }

    const double pressure_unit = 4.0 * std::numbers::pi * constants.G * constants.rho_c *
                                 constants.rho_c * constants.R * constants.R;
    Profile profile{params, constants, {}};
    profile.rows.reserve(grid.size());
    for (double y : grid) {
        ProfileRow row;
        row.y = y;
        row.u = detail::density_ratio(params.delta, params.gamma, y);
        row.m_ratio = mass_ratio(params, y);
        row.g = pressure_factor_g(params, y);
        row.P = pressure_unit * row.g;
        if (options.with_temperature && y < 1.0) {
            row.T = temperature(params, constants, y);
        }
        if (options.luminosity_n) {
            row.L = energy::luminosity_profile(params, constants, eparams, y);
        }
        profile.rows.push_back(row);
    }
    return profile;
}

}  // namespace starcore::structure
