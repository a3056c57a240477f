#pragma once

#include "sdgsrrf/errors.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Domain types shared by every module. All of them validate their invariants
// at construction and are immutable afterwards, so instances can be shared
// freely across concurrent readers.

namespace sdgsrrf {

enum class Polarity { Positive, Negative };

Polarity polarity_from_string(std::string_view text);
std::string_view to_string(Polarity polarity);

/// Inclusive calendar-year range.
struct YearRange {
    int first = 0;
    int last = 0;

    bool contains(int year) const noexcept { return year >= first && year <= last; }
};

/// Identity, unit, direction and natural bounds of one indicator proxy.
class IndicatorDef {
public:
    IndicatorDef(std::string code, std::string description, std::string unit,
                 Polarity polarity, std::optional<double> natural_floor = std::nullopt,
                 std::optional<double> natural_ceiling = std::nullopt);

    const std::string& code() const noexcept { return code_; }
    const std::string& description() const noexcept { return description_; }
    const std::string& unit() const noexcept { return unit_; }
    Polarity polarity() const noexcept { return polarity_; }
    std::optional<double> natural_floor() const noexcept { return natural_floor_; }
    std::optional<double> natural_ceiling() const noexcept { return natural_ceiling_; }

private:
    std::string code_;
    std::string description_;
    std::string unit_;
    Polarity polarity_;
    std::optional<double> natural_floor_;
    std::optional<double> natural_ceiling_;
};

/// Indicator definitions keyed by code; codes are unique.
class IndicatorCatalog {
public:
    IndicatorCatalog() = default;
    explicit IndicatorCatalog(std::vector<IndicatorDef> defs);

    const IndicatorDef* find(std::string_view code) const noexcept;
    const IndicatorDef& at(std::string_view code) const;
    std::span<const IndicatorDef> defs() const noexcept { return defs_; }
    std::size_t size() const noexcept { return defs_.size(); }

private:
    std::vector<IndicatorDef> defs_;  // sorted by code
};

class Observation {
public:
    Observation(std::string indicator, std::string geo, int year, double value,
                bool imputed = false);

    const std::string& indicator() const noexcept { return indicator_; }
    const std::string& geo() const noexcept { return geo_; }
    int year() const noexcept { return year_; }
    double value() const noexcept { return value_; }
    bool imputed() const noexcept { return imputed_; }

private:
    std::string indicator_;
    std::string geo_;
    int year_;
    double value_;
    bool imputed_;
};

/// Tidy set of observations plus the declared geography and year universe.
/// Keys (indicator, geo, year) are unique; observations are kept sorted by
/// that key, so iteration order is deterministic.
class Panel {
public:
    Panel() = default;
    Panel(std::vector<Observation> observations, std::vector<std::string> geos,
          YearRange years);

    /// Builds a panel whose declared universe is exactly what the data shows.
    static Panel infer(std::vector<Observation> observations);

    std::span<const Observation> observations() const noexcept { return observations_; }
    std::span<const std::string> geos() const noexcept { return geos_; }
    std::span<const std::string> indicators() const noexcept { return indicators_; }
    YearRange years() const noexcept { return years_; }
    bool empty() const noexcept { return observations_.empty(); }
    std::size_t size() const noexcept { return observations_.size(); }

    const Observation* find(std::string_view indicator, std::string_view geo,
                            int year) const noexcept;

private:
    std::vector<Observation> observations_;
    std::vector<std::string> geos_;        // sorted, unique
    std::vector<std::string> indicators_;  // sorted, unique
    YearRange years_{0, -1};               // empty range when no observations
};

/// Five-number summary of a pooled distribution.
class DistributionStats {
public:
    DistributionStats(std::string indicator, double min, double q1, double median, double q3,
                      double max, std::size_t n);

    const std::string& indicator() const noexcept { return indicator_; }
    double min() const noexcept { return min_; }
    double q1() const noexcept { return q1_; }
    double median() const noexcept { return median_; }
    double q3() const noexcept { return q3_; }
    double max() const noexcept { return max_; }
    std::size_t n() const noexcept { return n_; }

private:
    std::string indicator_;
    double min_, q1_, median_, q3_, max_;
    std::size_t n_;
};

/// How a goalpost endpoint was determined.
enum class GoalpostOrigin { ObservedExtremum, TukeyFence, NaturalBoundClip };

GoalpostOrigin goalpost_origin_from_string(std::string_view text);
std::string_view to_string(GoalpostOrigin origin);

/// Fixed normalization bounds: g1 is the natural zero, g2 the aspirational
/// target. The origin of each endpoint is kept for traceability.
class Goalposts {
public:
    Goalposts(std::string indicator, double g1, double g2,
              GoalpostOrigin g1_origin = GoalpostOrigin::ObservedExtremum,
              GoalpostOrigin g2_origin = GoalpostOrigin::ObservedExtremum);

    const std::string& indicator() const noexcept { return indicator_; }
    double g1() const noexcept { return g1_; }
    double g2() const noexcept { return g2_; }
    double span() const noexcept { return g2_ - g1_; }
    GoalpostOrigin g1_origin() const noexcept { return g1_origin_; }
    GoalpostOrigin g2_origin() const noexcept { return g2_origin_; }

private:
    std::string indicator_;
    double g1_, g2_;
    GoalpostOrigin g1_origin_, g2_origin_;
};

/// Goalposts keyed by indicator code.
class GoalpostSet {
public:
    GoalpostSet() = default;
    explicit GoalpostSet(std::vector<Goalposts> entries);

    const Goalposts* find(std::string_view indicator) const noexcept;
    const Goalposts& at(std::string_view indicator) const;  // throws MissingGoalposts
    std::span<const Goalposts> entries() const noexcept { return entries_; }

private:
    std::vector<Goalposts> entries_;  // sorted by indicator
};

class NormalizedValue {
public:
    NormalizedValue(std::string indicator, std::string geo, int year, double score,
                    bool clamped = false, bool imputed = false);

    const std::string& indicator() const noexcept { return indicator_; }
    const std::string& geo() const noexcept { return geo_; }
    int year() const noexcept { return year_; }
    double score() const noexcept { return score_; }
    bool clamped() const noexcept { return clamped_; }
    bool imputed() const noexcept { return imputed_; }

private:
    std::string indicator_;
    std::string geo_;
    int year_;
    double score_;
    bool clamped_;
    bool imputed_;
};

/// Normalized scores with the same key discipline as Panel.
class NormalizedPanel {
public:
    NormalizedPanel() = default;
    explicit NormalizedPanel(std::vector<NormalizedValue> values);

    std::span<const NormalizedValue> values() const noexcept { return values_; }
    std::span<const std::string> geos() const noexcept { return geos_; }
    std::span<const std::string> indicators() const noexcept { return indicators_; }
    YearRange years() const noexcept { return years_; }
    bool empty() const noexcept { return values_.empty(); }
    std::size_t size() const noexcept { return values_.size(); }

    const NormalizedValue* find(std::string_view indicator, std::string_view geo,
                                int year) const noexcept;

private:
    std::vector<NormalizedValue> values_;
    std::vector<std::string> geos_;
    std::vector<std::string> indicators_;
    YearRange years_{0, -1};
};

/// Composite index values for one geography across years, together with the
/// indicator set and weights they were aggregated from.
class CompositeSeries {
public:
    CompositeSeries(std::string geo, std::vector<std::pair<int, double>> entries,
                    std::vector<std::string> indicator_set, std::vector<double> weights);

    const std::string& geo() const noexcept { return geo_; }
    std::span<const std::pair<int, double>> entries() const noexcept { return entries_; }
    std::span<const std::string> indicator_set() const noexcept { return indicator_set_; }
    std::span<const double> weights() const noexcept { return weights_; }

    std::optional<double> value_at(int year) const noexcept;

private:
    std::string geo_;
    std::vector<std::pair<int, double>> entries_;  // sorted by year
    std::vector<std::string> indicator_set_;
    std::vector<double> weights_;
};

/// Non-fatal event worth surfacing to the caller (clamped score, imputed
/// value, zero component, missing amount...). The CLI serializes these into
/// the machine-readable warnings section of its JSON output.
struct Warning {
    std::string code;
    std::string message;
};

}  // namespace sdgsrrf
