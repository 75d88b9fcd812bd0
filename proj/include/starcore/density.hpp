#ifndef STARCORE_DENSITY_HPP
#define STARCORE_DENSITY_HPP

#include <string>
#include <variant>
#include <vector>

// The density-model family: the canonical two-parameter law
// u(y) = (1 - y^delta)^gamma, the generalized product form
// prod_i (1 - y^{a_i})^{b_i}, and the polynomial candidates that are ruled
// out by interior roots. y = r/R in [0,1], u = rho/rho_c.

namespace starcore::density {

/// Parameters of the canonical law u = (1 - y^delta)^gamma.
struct ModelParams {
    double delta = 0.0;  // dimensionless exponent, > 0
    int gamma = 0;       // positive integer exponent

    void validate() const;
};

struct ProductFactor {
    double exponent = 0.0;  // a > 0
    int power = 0;          // b >= 0
};

/// u(y) = prod_i (1 - y^{a_i})^{b_i}.
struct ProductDensityModel {
    std::vector<ProductFactor> factors;
};

/// c0 + c1 y + c2 y^2 + ...; normalized candidates have c0 = 1.
struct PolynomialDensityModel {
    std::vector<double> coefficients;
};

/// (1 - y^delta)^gamma for y in [0,1].
double eval_density_ratio(const ModelParams& params, double y);

double eval_product_model(const ProductDensityModel& model, double y);

/// Horner evaluation; no domain restriction.
double eval_poly_model(const PolynomialDensityModel& model, double y);

/// All sign-change roots strictly inside (0,1), located by a 4096-point scan
/// plus bisection to tolerance tol. Boundary roots are excluded.
std::vector<double> roots_in_open_unit_interval(const PolynomialDensityModel& model,
                                                double tol);

/// One of the eight published density-model candidates, keyed by the column
/// name used in the reference data files.
struct NamedDensityModel {
    std::string name;
    std::variant<PolynomialDensityModel, ProductDensityModel> model;

    double eval(double y) const;
};

/// The eight candidates in reference-table column order: the two polynomial
/// fits, the hand-picked product models, and the (1 - y^1.28)^10 law.
const std::vector<NamedDensityModel>& reference_density_models();

}  // namespace starcore::density

#endif
