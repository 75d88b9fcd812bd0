#include "starcore/energy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "starcore/specfun.hpp"

namespace starcore::energy {

using specfun::gauss_2f1_terminating;
using specfun::KahanSum;
using specfun::ln_gamma;

namespace {

constexpr double kPi = std::numbers::pi;

void check_unit_interval(double y, const char* who) {
    if (!(y >= 0.0 && y <= 1.0)) {
        throw std::domain_error(std::string(who) + ": y must lie in [0,1]");
    }
}

// int_0^1 u^{s delta + 4} (1-u^delta)^{ng} du = B(5/delta + s, ng+1)/delta.
double beta_moment(double delta, int ng, int s) {
    const double a = 5.0 / delta + s;
    return std::exp(ln_gamma(a) + ln_gamma(ng + 1.0) - ln_gamma(a + ng + 1.0)) / delta;
}

double luminosity_prefactor(const ModelParams& params, const SolarConstants& constants,
                            const EnergyParams& eparams) {
    const double mu_factor =
        constants.mu ? *constants.mu / (constants.k_boltzmann * constants.N_A) : 1.0;
    const double four_pi = 4.0 * kPi;
    return four_pi * four_pi * eparams.epsilon0 * mu_factor * constants.G *
           std::pow(constants.rho_c, eparams.n + 2) *
           (constants.R * constants.R) / (params.delta * params.delta);
}

}  // namespace

void EnergyParams::validate() const {
    if (n < 1 || m < 1) throw std::invalid_argument("EnergyParams: n and m must be >= 1");
    if (!(epsilon0 > 0.0)) throw std::invalid_argument("EnergyParams: epsilon0 must be positive");
}

double epsilon_rate(double rho, double T, const EnergyParams& params) {
    params.validate();
    return params.epsilon0 * std::pow(rho, params.n) * std::pow(T, params.m);
}

namespace detail {

double psi(double delta, int gamma) {
    if (gamma < 0) throw std::invalid_argument("psi: gamma must be non-negative");
    KahanSum acc;
    double cm = 1.0;  // (-gamma)_m / m!
    for (int m = 0; m <= gamma; ++m) {
        const double a3 = 3.0 / delta + m;
        const double a2 = 2.0 / delta + m;
        double tail = 1.0;
        for (int j = 1; j <= gamma; ++j) tail *= j / (a2 + j);
        acc.add(cm * tail / (a3 * a2));
        cm *= static_cast<double>(-gamma + m) / (m + 1);
    }
    return acc.value();
}

double phi(double delta, int gamma, double y) {
    if (gamma < 0) throw std::invalid_argument("phi: gamma must be non-negative");
    check_unit_interval(y, "phi");
    const double zd = std::pow(y, delta);
    KahanSum acc;
    double cm = 1.0;
    for (int m = 0; m <= gamma; ++m) {
        const double a3 = 3.0 / delta + m;
        const double a2 = 2.0 / delta + m;
        acc.add(cm * std::pow(y, m * delta + 2.0) / (a3 * a2) *
                gauss_2f1_terminating(-gamma, a2, a2 + 1.0, zd));
        cm *= static_cast<double>(-gamma + m) / (m + 1);
    }
    return acc.value();
}

double integral_I0(double delta, int gamma, int n) {
    const int ng = n * gamma;
    const double a = 3.0 / delta;
    return std::exp(ln_gamma(a) + ln_gamma(ng + 1.0) - ln_gamma(a + ng + 1.0)) / delta;
}

double integral_I1(double delta, int gamma, int n) {
    const int ng = n * gamma;
    // Beta moments depend on m1+m2 only.
    std::vector<double> moment(2 * gamma + 1);
    for (int s = 0; s <= 2 * gamma; ++s) moment[s] = beta_moment(delta, ng, s);
    KahanSum acc;
    double c1 = 1.0;
    for (int m1 = 0; m1 <= gamma; ++m1) {
        double c2 = 1.0;
        for (int m2 = 0; m2 <= gamma; ++m2) {
            const int s = m1 + m2;
            acc.add(c1 * c2 / ((3.0 / delta + m1) * (2.0 / delta + s)) * moment[s]);
            c2 *= static_cast<double>(-gamma + m2) / (m2 + 1);
        }
        c1 *= static_cast<double>(-gamma + m1) / (m1 + 1);
    }
    return acc.value();
}

}  // namespace detail

double psi(const ModelParams& params) {
    params.validate();
    return detail::psi(params.delta, params.gamma);
}

double phi(const ModelParams& params, double y) {
    params.validate();
    return detail::phi(params.delta, params.gamma, y);
}

double integral_I0(const ModelParams& params, int n) {
    params.validate();
    if (n < 1) throw std::invalid_argument("integral_I0: n must be >= 1");
    return detail::integral_I0(params.delta, params.gamma, n);
}

double integral_I1(const ModelParams& params, int n) {
    params.validate();
    if (n < 1) throw std::invalid_argument("integral_I1: n must be >= 1");
    return detail::integral_I1(params.delta, params.gamma, n);
}

double integral_I1_kdf(const ModelParams& params, int n) {
    params.validate();
    if (n < 1) throw std::invalid_argument("integral_I1_kdf: n must be >= 1");
    const double delta = params.delta;
    const double gamma = params.gamma;
    const int ng = n * params.gamma;
    specfun::KdfSpec spec;
    spec.upper_joint = {2.0 / delta, 5.0 / delta};
    spec.upper_x = {-gamma, 3.0 / delta};
    spec.upper_y = {-gamma};
    spec.lower_joint = {2.0 / delta + 1.0, 5.0 / delta + ng + 1.0};
    spec.lower_x = {3.0 / delta + 1.0};
    spec.x = spec.y = 1.0;
    const double prefactor =
        delta / 6.0 *
        std::exp(ln_gamma(ng + 1.0) + ln_gamma(5.0 / delta) - ln_gamma(5.0 / delta + ng + 1.0));
    return prefactor * specfun::kdf_eval(spec);
}

double integral_I2(const ModelParams& params, int n, double y, double R) {
    params.validate();
    if (n < 1) throw std::invalid_argument("integral_I2: n must be >= 1");
    check_unit_interval(y, "integral_I2");
    const int ng = n * params.gamma;
    const double a3 = 3.0 / params.delta;
    const double r = y * R;
    return r * r * r / 3.0 *
           gauss_2f1_terminating(-ng, a3, a3 + 1.0, std::pow(y, params.delta));
}

double integral_I3(const ModelParams& params, int n, double y, double R) {
    params.validate();
    if (n < 1) throw std::invalid_argument("integral_I3: n must be >= 1");
    check_unit_interval(y, "integral_I3");
    const double delta = params.delta;
    const int gamma = params.gamma;
    const int ng = n * gamma;
    const double zd = std::pow(y, delta);
    // The truncated-interval moments depend on m1+m2 only.
    std::vector<double> moment(2 * gamma + 1);
    for (int s = 0; s <= 2 * gamma; ++s) {
        const double a5 = 5.0 / delta + s;
        moment[s] = std::pow(y, s * delta + 5.0) / (delta * a5) *
                    gauss_2f1_terminating(-ng, a5, a5 + 1.0, zd);
    }
    KahanSum acc;
    double c1 = 1.0;
    for (int m1 = 0; m1 <= gamma; ++m1) {
        double c2 = 1.0;
        for (int m2 = 0; m2 <= gamma; ++m2) {
            const int s = m1 + m2;
            acc.add(c1 * c2 / ((3.0 / delta + m1) * (2.0 / delta + s)) * moment[s]);
            c2 *= static_cast<double>(-gamma + m2) / (m2 + 1);
        }
        c1 *= static_cast<double>(-gamma + m1) / (m1 + 1);
    }
    return R * R * R * acc.value();
}

double total_luminosity(const ModelParams& params, const SolarConstants& constants,
                        const EnergyParams& eparams) {
    params.validate();
    constants.validate();
    eparams.validate();
    if (eparams.m != 1) {
        throw std::invalid_argument(
            "total_luminosity: closed form requires m = 1; integrate numerically for m > 1");
    }
    const double R3 = std::pow(constants.R, 3);
    const double bracket = psi(params) * integral_I0(params, eparams.n) -
                           integral_I1(params, eparams.n);
    return luminosity_prefactor(params, constants, eparams) * R3 * bracket;
}

double luminosity_profile(const ModelParams& params, const SolarConstants& constants,
                          const EnergyParams& eparams, double y) {
    params.validate();
    constants.validate();
    eparams.validate();
    if (eparams.m != 1) {
        throw std::invalid_argument(
            "luminosity_profile: closed form requires m = 1; integrate numerically for m > 1");
    }
    check_unit_interval(y, "luminosity_profile");
    if (y == 0.0) return 0.0;
    // At the surface the Beta form of I0/I1 is better conditioned than the
    // unit-argument series; the two routes are algebraically identical.
    if (y == 1.0) return total_luminosity(params, constants, eparams);
    const double bracket = psi(params) * integral_I2(params, eparams.n, y, constants.R) -
                           integral_I3(params, eparams.n, y, constants.R);
    return luminosity_prefactor(params, constants, eparams) * bracket;
}

}  // namespace starcore::energy
