#ifndef STARCORE_CALIBRATE_HPP
#define STARCORE_CALIBRATE_HPP

#include <string>
#include <vector>

#include "starcore/density.hpp"

// Parameter determination: the mass-normalization constraint solved for
// delta given gamma, least-squares polynomial fitting, and (delta, gamma)
// selection against reference density data.

namespace starcore::calibrate {

using density::ModelParams;
using density::PolynomialDensityModel;

/// Reference data column: strictly increasing ordinates y in (0,1).
struct ReferenceTable {
    struct Row {
        double y = 0.0;
        double value = 0.0;
    };
    std::vector<Row> rows;
    std::string source_label;

    /// Throws unless y is strictly increasing in (0,1); with unit_range,
    /// values must lie in [0,1] (density/mass tables).
    void validate(bool unit_range = true) const;
};

/// prod_{j=1..gamma}(3/delta + j)/gamma!; strictly decreasing in delta.
double constraint_value(double delta, int gamma);

/// The unique delta > 0 with constraint_value(delta, gamma) = target, by
/// bracketing bisection on [1e-6, 64] to |ddelta| <= 1e-10. Throws
/// std::domain_error when the target is outside the attainable range.
double solve_delta(int gamma, double target);

/// Ordinary least squares over the monomial basis, via normal equations
/// with long-double accumulation. Throws on rank deficiency.
PolynomialDensityModel fit_polynomial(const ReferenceTable& data, int degree);

struct FitReport {
    struct Row {
        int gamma = 0;
        double delta = 0.0;
        double sse = 0.0;
    };
    std::vector<Row> rows;  // one per candidate gamma, ascending
    ModelParams best;       // smallest SSE; ties break to smallest gamma
};

/// For each gamma in [gamma_lo, gamma_hi], solve delta from the mass target
/// and score the density law against the data; return the SSE minimizer.
FitReport fit_model_params(const ReferenceTable& data, int gamma_lo, int gamma_hi,
                           double mass_target);

}  // namespace starcore::calibrate

#endif
