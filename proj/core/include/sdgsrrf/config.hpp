#pragma once

#include "sdgsrrf/types.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdgsrrf {

/// Per-indicator metadata override from the config file.
struct IndicatorOverride {
    std::optional<Polarity> polarity;
    std::optional<double> natural_floor;
    std::optional<double> natural_ceiling;
};

/// One structured file drives the whole pipeline: aggregation set and
/// weights, geography universe, year range, pooling and imputation settings.
/// JSON with // comments allowed.
struct IndexConfig {
    std::vector<std::string> indicators;
    std::map<std::string, double> weights;  // absent indicator -> weight 1
    std::vector<std::string> geos;
    YearRange years{2014, 2021};
    int pool_year_min = 2000;
    bool pool_include_imputed = false;
    std::optional<int> locf_target_year;
    std::vector<std::string> locf_indicators;
    std::optional<double> zero_floor;
    std::map<std::string, IndicatorOverride> overrides;

    static IndexConfig load(std::istream& in);
    void save(std::ostream& out) const;

    /// Weights aligned with `indicators` (1.0 where unspecified).
    std::vector<double> weight_vector() const;

    /// Applies polarity / natural-bound overrides to a catalog.
    IndicatorCatalog apply_overrides(const IndicatorCatalog& catalog) const;
};

}  // namespace sdgsrrf
