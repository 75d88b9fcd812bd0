#ifndef STARCORE_ENERGY_HPP
#define STARCORE_ENERGY_HPP

#include "starcore/structure.hpp"

// Thermonuclear energy generation and luminosity for the power-law rate
// eps = eps0 rho^n T^m. Closed forms exist for m = 1; the general case is
// covered numerically by the quadrature oracle.

namespace starcore::energy {

using density::ModelParams;
using structure::SolarConstants;

struct EnergyParams {
    double epsilon0 = 1.0;  // erg s^-1 g^-1 per unit rho^n T^m
    int n = 1;              // density exponent, >= 1
    int m = 1;              // temperature exponent, >= 1; closed forms need m = 1

    void validate() const;
};

/// eps0 rho^n T^m.
double epsilon_rate(double rho, double T, const EnergyParams& params);

// Raw (delta, gamma) kernels; gamma = 0 admitted for analytic limits.
namespace detail {
double psi(double delta, int gamma);
double phi(double delta, int gamma, double y);
double integral_I0(double delta, int gamma, int n);
double integral_I1(double delta, int gamma, int n);
}  // namespace detail

/// psi(delta, gamma) = sum_m [(-gamma)_m/m!] / ((3/d+m)(2/d+m)) *
/// gamma!/prod_{j=1..gamma}(2/d+m+j). Equals delta^2 g(0).
double psi(const ModelParams& params);

/// phi(y) = sum_m [(-gamma)_m/m!] y^{m delta+2} / ((3/d+m)(2/d+m)) *
/// 2F1(-gamma, 2/d+m; 2/d+m+1; y^delta). phi(0) = 0, phi(1) = psi,
/// and psi - phi(y) = delta^2 g(y).
double phi(const ModelParams& params, double y);

/// I0 = int_0^1 u^2 (1-u^delta)^{n gamma} du = B(3/delta, n gamma + 1)/delta.
double integral_I0(const ModelParams& params, int n);

/// I1 = int_0^1 u^2 (1-u^delta)^{n gamma} phi(u) du, as the explicit double
/// sum with each inner integral reduced to a Beta function.
double integral_I1(const ModelParams& params, int n);

/// I1 repackaged as a terminating Kampe de Feriet series at (1,1); exists as
/// a cross-representation check of integral_I1.
double integral_I1_kdf(const ModelParams& params, int n);

/// I2(y) = int_0^{yR} t^2 (1-(t/R)^delta)^{n gamma} dt
///       = (y^3 R^3/3) 2F1(-n gamma, 3/delta; 3/delta+1; y^delta).
double integral_I2(const ModelParams& params, int n, double y, double R);

/// I3(y) = int_0^{yR} t^2 (1-(t/R)^delta)^{n gamma} phi(t/R) dt as a
/// terminating double sum.
double integral_I3(const ModelParams& params, int n, double y, double R);

/// Total luminosity for m = 1:
/// L = (4 pi)^2 eps0 (mu/(k N_A)) G rho_c^{n+2} (R^2/delta^2) R^3
///     [psi I0 - I1], erg s^-1. With constants.mu unset the molecular-weight
/// factor is 1. m != 1 throws (no closed form; use the quadrature oracle).
double total_luminosity(const ModelParams& params, const SolarConstants& constants,
                        const EnergyParams& eparams);

/// L(y) for m = 1, with I2, I3 in place of I0 R^3, I1 R^3. Non-decreasing in
/// y; L(0) = 0 and L(1) equals total_luminosity exactly.
double luminosity_profile(const ModelParams& params, const SolarConstants& constants,
                          const EnergyParams& eparams, double y);

}  // namespace starcore::energy

#endif
