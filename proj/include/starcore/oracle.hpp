#ifndef STARCORE_ORACLE_HPP
#define STARCORE_ORACLE_HPP

#include <functional>
#include <stdexcept>

#include "starcore/energy.hpp"
#include "starcore/structure.hpp"

// Independent numerical validation: adaptive Gauss-Kronrod quadrature of the
// defining integrals, so every closed form in structure/ and energy/ can be
// checked against direct integration.

namespace starcore::oracle {

using density::ModelParams;
using energy::EnergyParams;
using structure::SolarConstants;

struct QuadratureSettings {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    int max_subdivisions = 4000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

/// Raised when the subdivision budget is exhausted; carries the best
/// estimate reached.
class QuadratureNonConvergence : public std::runtime_error {
public:
    QuadratureNonConvergence(QuadratureResult best)
        : std::runtime_error("integrate_adaptive: subdivision limit reached"), best_(best) {}
    const QuadratureResult& best() const { return best_; }

private:
    QuadratureResult best_;
};

/// Globally adaptive Gauss-Kronrod (7,15) integration of f over [a,b].
/// Deterministic for fixed settings: the worst-error panel (ties broken by
/// left endpoint) is bisected until the summed error estimate satisfies
/// err <= max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureSettings& settings = {});

/// M(yR) = 4 pi int_0^{yR} t^2 rho(t) dt, grams.
double mass_by_quadrature(const ModelParams& params, const SolarConstants& constants,
                          double y, const QuadratureSettings& settings = {});

/// P(yR) = G int_{yR}^{R} M(t) rho(t)/t^2 dt (zero surface pressure), with
/// the closed-form M(t) inside the integrand. Adjudicates the conflicting
/// published pressure tables.
double pressure_by_quadrature(const ModelParams& params, const SolarConstants& constants,
                              double y, const QuadratureSettings& settings = {});

/// L(yR) = int_0^{yR} 4 pi t^2 rho eps(rho, T) dt for any positive integer
/// m, n; the m = 1 case cross-checks the closed-form luminosity.
double luminosity_by_quadrature(const ModelParams& params, const SolarConstants& constants,
                                const EnergyParams& eparams, double y,
                                const QuadratureSettings& settings = {});

}  // namespace starcore::oracle

#endif
