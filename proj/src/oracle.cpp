#include "starcore/oracle.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "starcore/specfun.hpp"

namespace starcore::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1] (QUADPACK dqk15).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double err = 0.0;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double offset = half * kKronrodNodes[i];
        const double pair = f(center - offset) + f(center + offset);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    Panel panel;
    panel.a = a;
    panel.b = b;
    panel.value = kronrod * half;
    panel.err = std::abs((kronrod - gauss) * half);
    return panel;
}

struct PanelWorse {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.err != rhs.err) return lhs.err < rhs.err;
        return lhs.a > rhs.a;  // deterministic tie-break
    }
};

}  // namespace

void QuadratureSettings::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw std::invalid_argument("QuadratureSettings: tolerances must be positive");
    }
    if (max_subdivisions < 10) {
        throw std::invalid_argument("QuadratureSettings: max_subdivisions must be >= 10");
    }
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureSettings& settings) {
    settings.validate();
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0};
        throw std::invalid_argument("integrate_adaptive: requires a < b");
    }
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> panels;
    panels.push(evaluate_panel(f, a, b));
    double total = panels.top().value;
    double total_err = panels.top().err;
    int subdivisions = 0;
    while (total_err > std::max(settings.abs_tol, settings.rel_tol * std::abs(total))) {
        if (++subdivisions > settings.max_subdivisions) {
            throw QuadratureNonConvergence({total, total_err});
        }
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        panels.push(left);
        panels.push(right);
    }
    // Recompute the sums panel-by-panel to shed the incremental rounding.
    specfun::KahanSum value_acc;
    specfun::KahanSum err_acc;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> drain = std::move(panels);
    while (!drain.empty()) {
        value_acc.add(drain.top().value);
        err_acc.add(drain.top().err);
        drain.pop();
    }
    return {value_acc.value(), err_acc.value()};
}

double mass_by_quadrature(const ModelParams& params, const SolarConstants& constants,
                          double y, const QuadratureSettings& settings) {
    params.validate();
    constants.validate();
    if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("mass_by_quadrature: y in [0,1]");
    if (y == 0.0) return 0.0;
    const auto integrand = [&](double t) {
        const double u = structure::detail::density_ratio(params.delta, params.gamma,
                                                          t / constants.R);
        return 4.0 * kPi * t * t * constants.rho_c * u;
    };
    return integrate_adaptive(integrand, 0.0, y * constants.R, settings).value;
}

double pressure_by_quadrature(const ModelParams& params, const SolarConstants& constants,
                              double y, const QuadratureSettings& settings) {
    params.validate();
    constants.validate();
    if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("pressure_by_quadrature: y in [0,1]");
    if (y == 1.0) return 0.0;
    const auto integrand = [&](double t) {
        const double yt = t / constants.R;
        const double mass = structure::enclosed_mass(params, constants, yt);
        const double rho =
            constants.rho_c * structure::detail::density_ratio(params.delta, params.gamma, yt);
        return mass * rho / (t * t);
    };
    return constants.G *
           integrate_adaptive(integrand, y * constants.R, constants.R, settings).value;
}

double luminosity_by_quadrature(const ModelParams& params, const SolarConstants& constants,
                                const EnergyParams& eparams, double y,
                                const QuadratureSettings& settings) {
    params.validate();
    constants.validate();
    eparams.validate();
    if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("luminosity_by_quadrature: y in [0,1]");
    if (y == 0.0) return 0.0;
    const double t_scale = structure::temperature_scale(params, constants);
    const auto integrand = [&](double t) {
        const double yt = t / constants.R;
        const double u = structure::detail::density_ratio(params.delta, params.gamma, yt);
        const double rho = constants.rho_c * u;
        const double g = structure::detail::pressure_factor_g(params.delta, params.gamma, yt);
        const double temperature = u > 0.0 ? t_scale * g / u : 0.0;
        return 4.0 * kPi * t * t * rho * energy::epsilon_rate(rho, temperature, eparams);
    };
    return integrate_adaptive(integrand, 0.0, y * constants.R, settings).value;
}

}  // namespace starcore::oracle
