#include "starcore/calibrate.hpp"

#include <cmath>
#include <stdexcept>

#include "starcore/specfun.hpp"

namespace starcore::calibrate {

void ReferenceTable::validate(bool unit_range) const {
    if (rows.empty()) throw std::invalid_argument("ReferenceTable: no rows");
    double prev = 0.0;
    for (const auto& row : rows) {
        if (!(row.y > 0.0 && row.y < 1.0)) {
            throw std::invalid_argument("ReferenceTable: ordinates must lie in (0,1)");
        }
        if (!(row.y > prev)) {
            throw std::invalid_argument("ReferenceTable: ordinates must be strictly increasing");
        }
        if (unit_range && !(row.value >= 0.0 && row.value <= 1.0)) {
            throw std::invalid_argument("ReferenceTable: values must lie in [0,1]");
        }
        prev = row.y;
    }
}

double constraint_value(double delta, int gamma) {
    if (!(delta > 0.0)) throw std::invalid_argument("constraint_value: delta must be positive");
    if (gamma < 0) throw std::invalid_argument("constraint_value: gamma must be non-negative");
    return specfun::poch_over_factorial(3.0 / delta, gamma);
}

double solve_delta(int gamma, double target) {
    if (gamma < 1) throw std::invalid_argument("solve_delta: gamma must be a positive integer");
    double lo = 1e-6;
    double hi = 64.0;
    if (constraint_value(lo, gamma) < target || constraint_value(hi, gamma) > target) {
        throw std::domain_error("solve_delta: target outside the attainable range for this gamma");
    }
    // constraint_value is strictly decreasing in delta.
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (constraint_value(mid, gamma) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

PolynomialDensityModel fit_polynomial(const ReferenceTable& data, int degree) {
    data.validate(false);
    if (degree < 0) throw std::invalid_argument("fit_polynomial: degree must be non-negative");
    const int n = degree + 1;
    if (static_cast<std::size_t>(n) > data.rows.size()) {
        throw std::invalid_argument("fit_polynomial: need at least degree+1 rows");
    }
    // Normal equations A c = b with A_ij = sum y^{i+j}, b_i = sum v y^i.
    std::vector<long double> power_sums(2 * degree + 1, 0.0L);
    std::vector<long double> rhs(n, 0.0L);
    for (const auto& row : data.rows) {
        long double p = 1.0L;
        for (int k = 0; k <= 2 * degree; ++k) {
            power_sums[k] += p;
            if (k <= degree) rhs[k] += row.value * p;
            p *= row.y;
        }
    }
    std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = power_sums[i + j];
        a[i][n] = rhs[i];
    }
    // Gaussian elimination with partial pivoting.
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0.0L) {
            throw std::invalid_argument("fit_polynomial: rank-deficient system (duplicate ordinates?)");
        }
        std::swap(a[col], a[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const long double f = a[r][col] / a[col][col];
            for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    PolynomialDensityModel model;
    model.coefficients.resize(n);
    for (int i = 0; i < n; ++i) {
        model.coefficients[i] = static_cast<double>(a[i][n] / a[i][i]);
    }
    return model;
}

FitReport fit_model_params(const ReferenceTable& data, int gamma_lo, int gamma_hi,
                           double mass_target) {
    data.validate();
    if (gamma_lo < 1 || gamma_hi < gamma_lo) {
        throw std::invalid_argument("fit_model_params: invalid gamma range");
    }
    FitReport report;
    bool have_best = false;
    double best_sse = 0.0;
    for (int gamma = gamma_lo; gamma <= gamma_hi; ++gamma) {
        const double delta = solve_delta(gamma, mass_target);
        const ModelParams candidate{delta, gamma};
        long double sse = 0.0L;
        for (const auto& row : data.rows) {
            const double r = density::eval_density_ratio(candidate, row.y) - row.value;
            sse += static_cast<long double>(r) * r;
        }
        const double sse_d = static_cast<double>(sse);
        report.rows.push_back({gamma, delta, sse_d});
        // Tie-break: smallest gamma, then smallest delta (rows scan in that order).
        if (!have_best || sse_d < best_sse) {
            have_best = true;
            best_sse = sse_d;
            report.best = candidate;
        }
    }
    return report;
}

}  // namespace starcore::calibrate
