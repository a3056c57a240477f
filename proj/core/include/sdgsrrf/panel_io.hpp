#pragma once

#include "sdgsrrf/types.hpp"

#include <iosfwd>
#include <span>
#include <string>

namespace sdgsrrf {

/// Column naming for tidy panel files. The imputed column is optional on
/// input and always written on output.
struct PanelSchema {
    std::string indicator = "indicator";
    std::string geo = "geo";
    std::string year = "year";
    std::string value = "value";
    std::string imputed = "imputed";
    char delimiter = ',';
};

/// Reads a delimiter-separated panel with a header row. Blank value cells and
/// the literal NA are treated as missing (the row emits no observation).
/// Throws MalformedRow, DuplicateKey or NonFiniteValue.
Panel parse_panel(std::istream& in, const PanelSchema& schema = {});

/// Writes a panel sorted by (indicator, geo, year) with full-precision values,
/// so that parse_panel(write_panel(p)) == p.
void write_panel(std::ostream& out, const Panel& panel, const PanelSchema& schema = {});

/// JSON export mirroring the CSV fields: an array of observation objects.
void write_panel_json(std::ostream& out, const Panel& panel);

/// Last observation carried forward: for each (indicator in `indicators`,
/// geo) missing at target_year, copies the most recent earlier value with
/// imputed=true. Existing values are never altered; the call is idempotent.
Panel impute_locf(const Panel& panel, int target_year,
                  std::span<const std::string> indicators);

/// Pools one indicator's observations over a geography universe from year_min
/// onwards and summarizes them. Imputed values are excluded unless
/// include_imputed is set. Throws EmptyPool when nothing matches.
DistributionStats pool_distribution(const Panel& panel, const std::string& indicator,
                                    std::span<const std::string> geo_universe, int year_min,
                                    bool include_imputed = false);

}  // namespace sdgsrrf
