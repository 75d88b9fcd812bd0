#include "starcore/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace starcore::specfun {

namespace {

constexpr double kIntegerEps = 1e-9;

bool is_nonpositive_integer(double v) {
    return v <= kIntegerEps && std::abs(v - std::round(v)) < kIntegerEps;
}

// Smallest truncation order implied by a parameter list: -p for the least
// negative non-positive integer p, or "none".
int list_truncation(const std::vector<double>& params) {
    int bound = std::numeric_limits<int>::max();
    for (double p : params) {
        if (is_nonpositive_integer(p)) {
            bound = std::min(bound, static_cast<int>(std::llround(-p)));
        }
    }
    return bound;
}

// (v)_s vanishes iff v is a non-positive integer -t with t < s.
void check_lower_list(const std::vector<double>& params, int max_shift, const char* which) {
    for (double p : params) {
        if (is_nonpositive_integer(p) && -p < static_cast<double>(max_shift)) {
            throw std::domain_error(std::string("kdf_eval: lower ") + which +
                                    " parameter " + std::to_string(p) +
                                    " hits a pole inside the summation grid");
        }
    }
}

double poch_product(const std::vector<double>& params, int n) {
    double r = 1.0;
    for (double p : params) r *= pochhammer(p, n);
    return r;
}

}  // namespace

double pochhammer(double x, int n) {
    if (n < 0) throw std::domain_error("pochhammer: n must be non-negative");
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= x + k;
    return r;
}

double ln_pochhammer(double x, int n) {
    if (x <= 0.0) throw std::domain_error("ln_pochhammer: x must be positive");
    if (n < 0) throw std::domain_error("ln_pochhammer: n must be non-negative");
    return ln_gamma_ratio(x + n, x);
}

double ln_gamma(double x) {
    if (x <= 0.0) throw std::domain_error("ln_gamma: argument must be positive");
    // Lanczos, g = 7, 9 coefficients (Godfrey). ~1e-15 relative for x >= 0.5;
    // below 0.5 use ln Gamma(x) = ln Gamma(x+1) - ln x.
    static const double coeffs[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
    const double z = x - 1.0;
    double series = coeffs[0];
    for (int i = 1; i < 9; ++i) series += coeffs[i] / (z + i);
    const double t = z + 7.5;
    constexpr double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

double ln_gamma_ratio(double a, double b) {
    if (a <= 0.0 || b <= 0.0) {
        throw std::domain_error("ln_gamma_ratio: arguments must be positive");
    }
    if (a == b) return 0.0;
    return ln_gamma(a) - ln_gamma(b);
}

double poch_over_factorial(double x, int n) {
    if (n < 0) throw std::domain_error("poch_over_factorial: n must be non-negative");
    double r = 1.0;
    for (int j = 1; j <= n; ++j) r *= (x + j) / j;
    return r;
}

double gauss_2f1_terminating(int neg_a, double b, double c, double z) {
    if (neg_a > 0) {
        throw std::domain_error("gauss_2f1_terminating: first parameter must be a non-positive integer");
    }
    const int order = -neg_a;
    // (c)_k vanishes for some k <= order-1 iff c in {0,-1,...,-(order-1)}.
    if (is_nonpositive_integer(c) && -c < static_cast<double>(order)) {
        throw std::domain_error("gauss_2f1_terminating: lower parameter pole inside truncation range");
    }
    KahanSum acc;
    double term = 1.0;
    for (int k = 0; k <= order; ++k) {
        acc.add(term);
        term *= (neg_a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    }
    return acc.value();
}

double gauss_2f1_at_unity(int neg_a, double b, double c) {
    if (neg_a > 0) {
        throw std::domain_error("gauss_2f1_at_unity: first parameter must be a non-positive integer");
    }
    const int order = -neg_a;
    if (order == 0) return 1.0;
    if (c - b <= 0.0) {
        throw std::domain_error("gauss_2f1_at_unity: requires c - b > 0");
    }
    if (std::abs(c - (b + 1.0)) < kIntegerEps) {
        // order! / prod_{j=1..order}(b+j), the closed product form.
        double r = 1.0;
        for (int j = 1; j <= order; ++j) {
            const double factor = b + j;
            if (factor == 0.0) {
                throw std::domain_error("gauss_2f1_at_unity: pole in product form");
            }
            r *= j / factor;
        }
        return r;
    }
    if (c <= 0.0) {
        throw std::domain_error("gauss_2f1_at_unity: requires positive c");
    }
    // Gamma(c)Gamma(c+N-b) / (Gamma(c+N)Gamma(c-b)) with N = order.
    return std::exp(ln_gamma_ratio(c, c + order) + ln_gamma_ratio(c - b + order, c - b));
}

std::pair<int, int> kdf_termination_bounds(const KdfSpec& spec) {
    const int joint = list_truncation(spec.upper_joint);
    int bx = std::min(list_truncation(spec.upper_x), joint);
    int by = std::min(list_truncation(spec.upper_y), joint);
    if (bx == std::numeric_limits<int>::max() || by == std::numeric_limits<int>::max()) {
        throw std::domain_error("kdf: series does not terminate (no non-positive-integer upper parameter)");
    }
    return {bx, by};
}

double kdf_eval(const KdfSpec& spec, int max_x_order, int max_y_order) {
    const auto [bx, by] = kdf_termination_bounds(spec);
    if (max_x_order < bx || max_y_order < by) {
        throw std::invalid_argument("kdf_eval: requested orders truncate non-vanishing terms");
    }
    check_lower_list(spec.lower_joint, max_x_order + max_y_order, "joint");
    check_lower_list(spec.lower_x, max_x_order, "x");
    check_lower_list(spec.lower_y, max_y_order, "y");

    KahanSum acc;
    double m_factorial = 1.0;
    double x_pow = 1.0;
    for (int m = 0; m <= max_x_order; ++m) {
        if (m > 0) {
            m_factorial *= m;
            x_pow *= spec.x;
        }
        double n_factorial = 1.0;
        double y_pow = 1.0;
        for (int n = 0; n <= max_y_order; ++n) {
            if (n > 0) {
                n_factorial *= n;
                y_pow *= spec.y;
            }
            const double numer = poch_product(spec.upper_joint, m + n) *
                                 poch_product(spec.upper_x, m) *
                                 poch_product(spec.upper_y, n);
            const double denom = poch_product(spec.lower_joint, m + n) *
                                 poch_product(spec.lower_x, m) *
                                 poch_product(spec.lower_y, n);
            acc.add(numer / denom * x_pow * y_pow / (m_factorial * n_factorial));
        }
    }
    return acc.value();
}

double kdf_eval(const KdfSpec& spec) {
    const auto [bx, by] = kdf_termination_bounds(spec);
    return kdf_eval(spec, bx, by);
}

}  // namespace starcore::specfun
