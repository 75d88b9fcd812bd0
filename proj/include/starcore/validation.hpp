#ifndef STARCORE_VALIDATION_HPP
#define STARCORE_VALIDATION_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "starcore/reference.hpp"

// The validation suite: every closed form checked against adaptive
// quadrature, the two pressure representations against each other, the
// defining differential equations by finite differences, the phi/psi
// inequality, the published-table reproductions, calibration recovery, and
// the adjudication of the two conflicting pressure tables.

namespace starcore::validation {

struct Settings {
    double closed_form_rel_tol = 1e-8;   // quadrature vs closed form
    double representation_rel_tol = 1e-10;  // single-sum vs KdF pressure
    double identity_rel_tol = 1e-12;     // psi - phi = delta^2 g
    double ode_rel_tol = 1e-5;           // finite-difference residuals
    bool quick = false;                  // thinned grids for smoke runs
    std::string data_dir_override;
};

struct Check {
    std::string name;
    std::string kind;   // closed_form | representation | identity | ode |
                        // inequality | reference_table | calibration | informational
    double value = 0.0;      // measured deviation (or measured quantity)
    double tolerance = 0.0;  // bound it is held to (0 for informational)
    bool pass = false;
    std::string detail;
};

struct AdjudicationRow {
    double y = 0.0;
    double g_oracle = 0.0;  // dimensionless g from the hydrostatic integral
    double g_table4 = 0.0;
    double g_table6 = 0.0;
};

struct Report {
    std::vector<Check> checks;
    std::vector<reference::TableComparison> tables;  // tables 1..6
    std::vector<AdjudicationRow> adjudication;
    std::string confirmed_pressure_table;  // "table4", "table6" or "neither"
    bool quadrature_converged = true;
    bool closed_form_ok = false;  // every closed_form-kind check passed

    const Check* find(const std::string& name) const;
};

Report run_validation(const Settings& settings = {});

/// Deterministic JSON rendering of the report (stable key order).
std::string report_to_json(const Report& report, int indent = 2);

}  // namespace starcore::validation

#endif
