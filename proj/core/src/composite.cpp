#include "sdgsrrf/composite.hpp"

#include "sdgsrrf/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sdgsrrf {

double geometric_mean(std::span<const double> scores, std::span<const double> weights) {
    if (scores.empty()) throw EmptyInput("geometric_mean");
    if (!weights.empty() && weights.size() != scores.size())
        throw ValidationError("weights", "must match the score count");

    double weight_sum = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        double w = weights.empty() ? 1.0 : weights[i];
        if (!std::isfinite(w) || w < 0.0)
            throw ValidationError("weights", "must be non-negative and finite");
        weight_sum += w;
    }
    if (!(weight_sum > 0.0)) throw ValidationError("weights", "must have a positive sum");

    double log_sum = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        double s = scores[i];
        if (!std::isfinite(s) || s < 0.0) throw NegativeScore(s);
        double w = weights.empty() ? 1.0 : weights[i];
        if (w == 0.0) continue;
        if (s == 0.0) return 0.0;
        log_sum += w * std::log(s);
    }
    return std::exp(log_sum / weight_sum);
}

std::vector<double> gather_scores(const NormalizedPanel& panel, const std::string& geo,
                                  int year, std::span<const std::string> indicators) {
    std::vector<double> scores;
    scores.reserve(indicators.size());
    std::vector<CellKey> gaps;
    for (const std::string& indicator : indicators) {
        const NormalizedValue* v = panel.find(indicator, geo, year);
        if (!v) {
            gaps.push_back(CellKey{geo, year, indicator});
            continue;
        }
        scores.push_back(v->score());
    }
    if (!gaps.empty()) throw MissingCell(std::move(gaps));
    return scores;
}

std::vector<CompositeSeries> compute_index_series(const NormalizedPanel& panel,
                                                  std::span<const std::string> geos,
                                                  YearRange years, const IndexOptions& options,
                                                  std::vector<Warning>* warnings) {
    if (options.indicators.empty()) throw EmptyInput("index indicator set");
    if (years.first > years.last)
        throw ValidationError("years", "year range start must not exceed end");

    std::vector<std::string> sorted_geos(geos.begin(), geos.end());
    std::sort(sorted_geos.begin(), sorted_geos.end());

    // surface every gap at once before computing anything
    std::vector<CellKey> gaps;
    for (const std::string& geo : sorted_geos)
        for (int year = years.first; year <= years.last; ++year)
            for (const std::string& indicator : options.indicators)
                if (!panel.find(indicator, geo, year))
                    gaps.push_back(CellKey{geo, year, indicator});
    if (!gaps.empty()) throw MissingCell(std::move(gaps));

    std::vector<CompositeSeries> series;
    series.reserve(sorted_geos.size());
    for (const std::string& geo : sorted_geos) {
        std::vector<std::pair<int, double>> entries;
        entries.reserve(static_cast<std::size_t>(years.last - years.first + 1));
        for (int year = years.first; year <= years.last; ++year) {
            std::vector<double> scores = gather_scores(panel, geo, year, options.indicators);
            for (std::size_t i = 0; i < scores.size(); ++i) {
                if (scores[i] != 0.0) continue;
                if (options.zero_floor) {
                    scores[i] = *options.zero_floor;
                } else if (warnings) {
                    warnings->push_back(Warning{
                        "zero_component", "indicator " + options.indicators[i] + " is 0 for (" +
                                              geo + ", " + std::to_string(year) +
                                              "); the composite index collapses to 0"});
                }
            }
            // the mean is internal to [0, 100]; clamp the last-ulp overshoot
            entries.emplace_back(year,
                                 std::clamp(geometric_mean(scores, options.weights), 0.0, 100.0));
        }
        series.emplace_back(geo, std::move(entries), options.indicators, options.weights);
    }
    return series;
}

}  // namespace sdgsrrf
