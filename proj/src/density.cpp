#include "starcore/density.hpp"

#include <cmath>
#include <stdexcept>

namespace starcore::density {

namespace {

void check_unit_interval(double y, const char* who) {
    if (!(y >= 0.0 && y <= 1.0)) {
        throw std::domain_error(std::string(who) + ": y must lie in [0,1]");
    }
}

double ipow(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

}  // namespace

void ModelParams::validate() const {
    if (!(delta > 0.0)) throw std::invalid_argument("ModelParams: delta must be positive");
    if (gamma < 1) throw std::invalid_argument("ModelParams: gamma must be a positive integer");
}

double eval_density_ratio(const ModelParams& params, double y) {
    params.validate();
    check_unit_interval(y, "eval_density_ratio");
    return ipow(1.0 - std::pow(y, params.delta), params.gamma);
}

double eval_product_model(const ProductDensityModel& model, double y) {
    check_unit_interval(y, "eval_product_model");
    double r = 1.0;
    for (const auto& f : model.factors) {
        if (!(f.exponent > 0.0) || f.power < 0) {
            throw std::invalid_argument("eval_product_model: factors require a > 0, b >= 0");
        }
        r *= ipow(1.0 - std::pow(y, f.exponent), f.power);
    }
    return r;
}

double eval_poly_model(const PolynomialDensityModel& model, double y) {
    double r = 0.0;
    for (auto it = model.coefficients.rbegin(); it != model.coefficients.rend(); ++it) {
        r = r * y + *it;
    }
    return r;
}

std::vector<double> roots_in_open_unit_interval(const PolynomialDensityModel& model,
                                                double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("roots_in_open_unit_interval: tol must be positive");
    constexpr int kScanPoints = 4096;
    std::vector<double> roots;
    double prev_y = 0.0;
    double prev_v = eval_poly_model(model, prev_y);
    for (int i = 1; i <= kScanPoints; ++i) {
        const double y = static_cast<double>(i) / kScanPoints;
        const double v = eval_poly_model(model, y);
        if (prev_v == 0.0 && prev_y > 0.0) {
            roots.push_back(prev_y);
        } else if (prev_v * v < 0.0) {
            double lo = prev_y, hi = y;
            double flo = prev_v;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double fm = eval_poly_model(model, mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            const double root = 0.5 * (lo + hi);
            if (root > 0.0 && root < 1.0) roots.push_back(root);
        }
        prev_y = y;
        prev_v = v;
    }
    return roots;
}

double NamedDensityModel::eval(double y) const {
    return std::visit(
        [y](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PolynomialDensityModel>) {
                return eval_poly_model(m, y);
            } else {
                return eval_product_model(m, y);
            }
        },
        model);
}

const std::vector<NamedDensityModel>& reference_density_models() {
    static const std::vector<NamedDensityModel> models = {
        {"cubic_fit", PolynomialDensityModel{{1.0, -4.94, 6.67, -2.73}}},
        {"quartic_elim", PolynomialDensityModel{{1.0, -4.0, 2.0, 2.0, -1.0}}},
        {"sqrt_cube64", ProductDensityModel{{{0.5, 1}, {3.0, 64}}}},
        {"law15_16", ProductDensityModel{{{1.5, 16}}}},
        {"sqrt_cube64_lin", ProductDensityModel{{{0.5, 1}, {3.0, 64}, {1.0, 1}}}},
        {"law148_14", ProductDensityModel{{{1.48, 14}}}},
        {"law148_13", ProductDensityModel{{{1.48, 13}}}},
        {"law128_10", ProductDensityModel{{{1.28, 10}}}},
    };
    return models;
}

}  // namespace starcore::density
