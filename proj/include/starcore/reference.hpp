#ifndef STARCORE_REFERENCE_HPP
#define STARCORE_REFERENCE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "starcore/calibrate.hpp"
#include "starcore/density.hpp"

// Published reference tables: CSV ingestion, the known-discrepancy list,
// and recomputation of each table from first principles. The CSV files
// under data/ are the single source of truth shared by the golden tests
// and the `tables` command.

namespace starcore::reference {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const;  // throws if absent
    double number(std::size_t row, std::size_t col) const;
    const std::string& cell(std::size_t row, std::size_t col) const;
};

/// Reads a comma-separated file; lines starting with '#' and blank lines
/// are skipped; the first remaining line is the header.
CsvTable read_csv(const std::filesystem::path& path);

/// Shortest-form full-precision decimal formatting (17 significant digits,
/// '.' decimal separator), used everywhere CSV is emitted so identical
/// configs produce byte-identical output.
std::string format_full(double v);

/// Resolve the reference-data directory: explicit override, then the
/// STARCORE_DATA environment variable, then the compiled-in default.
std::filesystem::path data_dir(const std::string& override_path = "");

/// Load a two-column (y, value) reference table; validates strictly
/// increasing y in (0,1).
calibrate::ReferenceTable load_reference_column(const std::filesystem::path& file,
                                                const std::string& y_column,
                                                const std::string& value_column,
                                                bool unit_range = true);

struct TableCell {
    std::string column;
    std::string row_key;  // ordinate as printed, or 1-based row index
    double printed = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    bool flagged = false;  // known discrepancy: informational only
    bool pass = false;     // |printed - computed| <= tolerance
};

struct TableComparison {
    int table_id = 0;
    density::ModelParams params{0.0, 0};  // law used for tables 3-6
    std::vector<TableCell> cells;
    std::string banner;  // non-empty when the table semantics are unresolved

    bool all_matched() const;  // every unflagged cell passes
};

/// Recompute published table `id` (1..6) and compare cell by cell against
/// the shipped CSV. `params_override` substitutes the density law for
/// tables 3-6 (default delta = 1.2814, gamma = 10).
TableComparison compare_table(int id, const std::filesystem::path& dir,
                              std::optional<density::ModelParams> params_override = {});

}  // namespace starcore::reference

#endif
