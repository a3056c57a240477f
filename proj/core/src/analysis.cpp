#include "sdgsrrf/analysis.hpp"

#include "sdgsrrf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sdgsrrf {

namespace {

double checked_weight_sum(std::span<const std::string> indicators,
                          std::span<const double> weights) {
    if (indicators.empty()) throw EmptyInput("decomposition");
    if (!weights.empty() && weights.size() != indicators.size())
        throw ValidationError("weights", "must match the indicator count");
    double sum = 0.0;
    for (std::size_t i = 0; i < indicators.size(); ++i) {
        double w = weights.empty() ? 1.0 : weights[i];
        if (!std::isfinite(w) || w < 0.0)
            throw ValidationError("weights", "must be non-negative and finite");
        sum += w;
    }
    if (!(sum > 0.0)) throw ValidationError("weights", "must have a positive sum");
    return sum;
}

void require_positive(std::span<const std::string> indicators, std::span<const double> scores) {
    if (scores.size() != indicators.size())
        throw ValidationError("scores", "must match the indicator count");
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (!(scores[i] > 0.0)) throw ZeroScore(indicators[i]);
}

}  // namespace

TemporalDecomposition decompose_temporal(std::span<const std::string> indicators,
                                         std::span<const double> scores_from,
                                         std::span<const double> scores_to,
                                         std::span<const double> weights) {
    const double weight_sum = checked_weight_sum(indicators, weights);
    require_positive(indicators, scores_from);
    require_positive(indicators, scores_to);

    TemporalDecomposition result;
    result.contributions.reserve(indicators.size());
    for (std::size_t i = 0; i < indicators.size(); ++i) {
        const double share = (weights.empty() ? 1.0 : weights[i]) / weight_sum;
        const double log_c = share * std::log(scores_to[i] / scores_from[i]);
        result.contributions.push_back(
            Contribution{indicators[i], log_c, std::exp(log_c)});
        result.log_ratio += log_c;
    }
    result.factor = std::exp(result.log_ratio);
    return result;
}

CrossCountryDecomposition decompose_cross_country(std::span<const std::string> indicators,
                                                  std::span<const double> scores_a,
                                                  std::span<const double> scores_b,
                                                  std::span<const double> weights) {
    const double weight_sum = checked_weight_sum(indicators, weights);
    require_positive(indicators, scores_a);
    require_positive(indicators, scores_b);

    CrossCountryDecomposition result;
    result.contributions.reserve(indicators.size());
    for (std::size_t i = 0; i < indicators.size(); ++i) {
        const double share = (weights.empty() ? 1.0 : weights[i]) / weight_sum;
        const double log_c = share * std::log(scores_a[i] / scores_b[i]);
        result.contributions.push_back(
            Contribution{indicators[i], log_c, std::exp(log_c)});
        result.log_ratio += log_c;
    }
    result.ratio = std::exp(result.log_ratio);
    return result;
}

std::vector<GapRow> gap_metrics(std::span<const CompositeSeries> series) {
    std::map<int, std::vector<std::pair<std::string, double>>> by_year;
    for (const CompositeSeries& s : series)
        for (const auto& [year, value] : s.entries())
            by_year[year].emplace_back(s.geo(), value);

    std::vector<GapRow> rows;
    rows.reserve(by_year.size());
    for (auto& [year, values] : by_year) {
        if (values.size() < 2) throw InsufficientGeos(year);
        std::sort(values.begin(), values.end());  // geo order; ties resolved by name
        GapRow row;
        row.year = year;
        row.n_geos = static_cast<int>(values.size());
        auto max_it = values.begin(), min_it = values.begin();
        double sum = 0.0;
        for (auto it = values.begin(); it != values.end(); ++it) {
            sum += it->second;
            if (it->second > max_it->second) max_it = it;
            if (it->second < min_it->second) min_it = it;
        }
        row.range = max_it->second - min_it->second;
        row.max_geo = max_it->first;
        row.min_geo = min_it->first;
        row.mean = sum / static_cast<double>(values.size());
        double ss = 0.0;
        for (const auto& [geo, value] : values) ss += (value - row.mean) * (value - row.mean);
        const double stddev = std::sqrt(ss / static_cast<double>(values.size()));
        row.cv = row.mean != 0.0 ? stddev / row.mean : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sdgsrrf
