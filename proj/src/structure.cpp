#include "starcore/structure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "starcore/specfun.hpp"

namespace starcore::structure {

using specfun::gauss_2f1_terminating;
using specfun::KahanSum;
using specfun::poch_over_factorial;

namespace {

constexpr double kPi = std::numbers::pi;

void check_unit_interval(double y, const char* who) {
    if (!(y >= 0.0 && y <= 1.0)) {
        throw std::domain_error(std::string(who) + ": y must lie in [0,1]");
    }
}

void check_gamma(int gamma) {
    if (gamma < 0) throw std::invalid_argument("gamma must be non-negative");
}

}  // namespace

void SolarConstants::validate() const {
    if (!(rho_c > 0.0 && M_total > 0.0 && R > 0.0 && G > 0.0 && k_boltzmann > 0.0 && N_A > 0.0)) {
        throw std::invalid_argument("SolarConstants: all stored constants must be positive");
    }
    if (mu && !(*mu > 0.0)) {
        throw std::invalid_argument("SolarConstants: mu must be positive when set");
    }
}

SolarConstants SolarConstants::sun() {
    SolarConstants c;
    c.rho_c = 158.0;
    c.M_total = 1.991e33;
    c.R = 6.96e10;
    return c;
}

SolarConstants SolarConstants::reduced() {
    SolarConstants c;
    c.rho_c = 1.0;
    c.M_total = 1.0;
    c.R = 1.0;
    c.G = 1.0;
    c.k_boltzmann = 1.0;
    c.N_A = 1.0;
    c.mu = 1.0;
    return c;
}

namespace detail {

double density_ratio(double delta, int gamma, double y) {
    check_gamma(gamma);
    double r = 1.0;
    const double base = 1.0 - std::pow(y, delta);
    for (int i = 0; i < gamma; ++i) r *= base;
    return r;
}

double mass_ratio(double delta, int gamma, double y) {
    check_gamma(gamma);
    check_unit_interval(y, "mass_ratio");
    if (y == 1.0) return 1.0;  // normalization, unit-argument Gauss sum
    const double a3 = 3.0 / delta;
    return poch_over_factorial(a3, gamma) * y * y * y *
           gauss_2f1_terminating(-gamma, a3, a3 + 1.0, std::pow(y, delta));
}

double pressure_factor_g(double delta, int gamma, double y) {
    check_gamma(gamma);
    check_unit_interval(y, "pressure_factor_g");
    if (y == 1.0) return 0.0;  // P(R) = 0 boundary condition
    const double zd = std::pow(y, delta);
    KahanSum acc;
    double cm = 1.0;  // (-gamma)_m / m!
    for (int m = 0; m <= gamma; ++m) {
        const double a3 = 3.0 / delta + m;
        const double a2 = 2.0 / delta + m;
        // gamma! / prod_{j=1..gamma}(a2+j)
        double tail = 1.0;
        for (int j = 1; j <= gamma; ++j) tail *= j / (a2 + j);
        const double series = std::pow(y, m * delta + 2.0) *
                              gauss_2f1_terminating(-gamma, a2, a2 + 1.0, zd);
        acc.add(cm * (tail - series) / (a3 * a2));
        cm *= static_cast<double>(-gamma + m) / (m + 1);
    }
    return acc.value() / (delta * delta);
}

}  // namespace detail

double mass_ratio(const ModelParams& params, double y) {
    params.validate();
    return detail::mass_ratio(params.delta, params.gamma, y);
}

double enclosed_mass(const ModelParams& params, const SolarConstants& constants, double y) {
    params.validate();
    check_unit_interval(y, "enclosed_mass");
    const double a3 = 3.0 / params.delta;
    const double shell = 4.0 * kPi * constants.rho_c * std::pow(constants.R, 3) / 3.0;
    return shell * y * y * y *
           gauss_2f1_terminating(-params.gamma, a3, a3 + 1.0, std::pow(y, params.delta));
}

double central_density(const ModelParams& params, double M_total, double R) {
    params.validate();
    if (!(M_total > 0.0 && R > 0.0)) {
        throw std::invalid_argument("central_density: mass and radius must be positive");
    }
    return 3.0 * M_total / (4.0 * kPi * R * R * R) *
           poch_over_factorial(3.0 / params.delta, params.gamma);
}

double pressure_factor_g(const ModelParams& params, double y) {
    params.validate();
    return detail::pressure_factor_g(params.delta, params.gamma, y);
}

double pressure(const ModelParams& params, const SolarConstants& constants, double y) {
    constants.validate();
    return 4.0 * kPi * constants.G * constants.rho_c * constants.rho_c * constants.R *
           constants.R * pressure_factor_g(params, y);
}

double central_pressure(const ModelParams& params, const SolarConstants& constants) {
    return pressure(params, constants, 0.0);
}

double pressure_kdf(const ModelParams& params, const SolarConstants& constants, double y) {
    params.validate();
    constants.validate();
    check_unit_interval(y, "pressure_kdf");
    const double delta = params.delta;
    const double gamma = params.gamma;
    specfun::KdfSpec spec;
    spec.upper_joint = {2.0 / delta};
    spec.upper_x = {-gamma, 3.0 / delta};
    spec.upper_y = {-gamma};
    spec.lower_joint = {2.0 / delta + 1.0};
    spec.lower_x = {3.0 / delta + 1.0};
    const double prefactor =
        2.0 / 3.0 * kPi * constants.G * constants.rho_c * constants.rho_c;
    spec.x = spec.y = 1.0;
    const double p_c = prefactor * constants.R * constants.R * specfun::kdf_eval(spec);
    if (y == 0.0) return p_c;
    const double r = y * constants.R;
    spec.x = spec.y = std::pow(y, delta);
    return p_c - prefactor * r * r * specfun::kdf_eval(spec);
}

double temperature_scale(const ModelParams& params, const SolarConstants& constants) {
    params.validate();
    constants.validate();
    const double mu_factor =
        constants.mu ? *constants.mu / (constants.k_boltzmann * constants.N_A) : 1.0;
    return mu_factor * 4.0 * kPi * constants.G * constants.rho_c * constants.R * constants.R;
}

double temperature(const ModelParams& params, const SolarConstants& constants, double y) {
    params.validate();
    constants.validate();
    if (!(y >= 0.0 && y < 1.0)) {
        throw std::domain_error("temperature: surface singularity, requires y in [0,1)");
    }
    const double reduced = pressure_factor_g(params, y) /
                           detail::density_ratio(params.delta, params.gamma, y);
    if (!constants.mu) return reduced;
    return temperature_scale(params, constants) * reduced;
}

}  // namespace starcore::structure
