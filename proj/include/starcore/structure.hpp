#ifndef STARCORE_STRUCTURE_HPP
#define STARCORE_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "starcore/density.hpp"

// Closed-form mass, central density, pressure and temperature for the
// density law u = (1 - y^delta)^gamma, in hydrostatic equilibrium.
// Two pressure routes are provided: the single-sum form recommended for
// computation, and the Kampe de Feriet double-series representation used
// as a cross-check. CGS units throughout.

namespace starcore::structure {

using density::ModelParams;

struct SolarConstants {
    double rho_c = 0.0;        // central density, g cm^-3
    double M_total = 0.0;      // total mass, g
    double R = 0.0;            // radius, cm
    double G = 6.674e-8;       // gravitational constant, cm^3 g^-1 s^-2
    double k_boltzmann = 1.380649e-16;  // erg K^-1
    double N_A = 6.02214076e23;         // mol^-1
    std::optional<double> mu;  // mean molecular weight; absent => reduced units

    void validate() const;

    /// Sears (1964) solar values: rho_c = 158, M = 1.991e33, R = 6.96e10.
    static SolarConstants sun();

    /// All structural constants set to 1 (and mu = 1); for scale-free tests.
    static SolarConstants reduced();
};

// Raw (delta, gamma) kernels. gamma = 0 (the uniform sphere) is accepted
// here for analytic limit checks; the public wrappers require gamma >= 1.
namespace detail {
double mass_ratio(double delta, int gamma, double y);
double pressure_factor_g(double delta, int gamma, double y);
double density_ratio(double delta, int gamma, double y);
}  // namespace detail

/// M(r)/M(R) = [prod_{j=1..gamma}(3/delta+j)/gamma!] y^3
///             2F1(-gamma, 3/delta; 3/delta+1; y^delta); equals 1 at y = 1.
double mass_ratio(const ModelParams& params, double y);

/// M(r) in grams, built from rho_c and R.
double enclosed_mass(const ModelParams& params, const SolarConstants& constants, double y);

/// rho_c = 3M/(4 pi R^3) prod_{j=1..gamma}(3/delta+j)/gamma!.
double central_density(const ModelParams& params, double M_total, double R);

/// Dimensionless pressure factor g(y) with P = 4 pi G rho_c^2 R^2 g(y);
/// g(1) = 0 (zero surface pressure).
double pressure_factor_g(const ModelParams& params, double y);

/// P(y) = 4 pi G rho_c^2 R^2 g(y), dyn cm^-2.
double pressure(const ModelParams& params, const SolarConstants& constants, double y);

/// P_c = 4 pi G rho_c^2 R^2 g(0).
double central_pressure(const ModelParams& params, const SolarConstants& constants);

/// Pressure by the Kampe de Feriet representation
/// P(y) = P_c - (2/3) pi G rho_c^2 r^2 F[(y^delta, y^delta)], with P_c from
/// the same series at (1,1). Exists as a cross-representation check of
/// pressure_factor_g; the two agree to ~1e-12 relative.
double pressure_kdf(const ModelParams& params, const SolarConstants& constants, double y);

/// Perfect-gas temperature (mu/(k N_A)) 4 pi G rho_c R^2 g(y)/u(y) in K when
/// mu is set; the reduced proxy g(y)/u(y) otherwise. y = 1 is a domain error
/// (density vanishes at the surface).
double temperature(const ModelParams& params, const SolarConstants& constants, double y);

/// (mu/(k N_A)) 4 pi G rho_c R^2, the factor turning g/u into temperature.
/// With mu unset the molecular-weight factor is taken as 1 (reduced energy
/// bookkeeping); used by the energy module and the quadrature oracle.
double temperature_scale(const ModelParams& params, const SolarConstants& constants);

struct ProfileRow {
    double y = 0.0;
    double u = 0.0;        // rho/rho_c
    double m_ratio = 0.0;  // M(r)/M(R)
    double g = 0.0;        // dimensionless pressure factor
    double P = 0.0;        // dyn cm^-2
    std::optional<double> T;  // K, or g/u when constants.mu is unset
    std::optional<double> L;  // erg s^-1, filled by the profile builder on request
};

struct Profile {
    ModelParams params;
    SolarConstants constants;
    std::vector<ProfileRow> rows;
};

struct ProfileOptions {
    bool with_temperature = true;
    std::optional<int> luminosity_n;  // m = 1 closed form when set
    double epsilon0 = 1.0;
};

/// Evaluate the profile on a strictly increasing grid of y values in [0,1].
/// Rows are evaluated independently; output order follows the grid.
Profile build_profile(const ModelParams& params, const SolarConstants& constants,
                      const std::vector<double>& grid, const ProfileOptions& options = {});

}  // namespace starcore::structure

#endif
