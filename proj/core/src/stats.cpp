#include "sdgsrrf/stats.hpp"

#include "sdgsrrf/errors.hpp"

#include <cmath>
#include <cstddef>

namespace sdgsrrf::stats {

double quantile(std::span<const double> sorted_values, double p) {
    if (sorted_values.empty()) throw EmptyInput("quantile");
    const std::size_t n = sorted_values.size();
    if (n == 1) return sorted_values[0];
    const double h = static_cast<double>(n - 1) * p;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted_values[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

QuartileTriple quartiles(std::span<const double> sorted_values) {
    if (sorted_values.empty()) throw EmptyInput("quartiles");
    return QuartileTriple{quantile(sorted_values, 0.25), quantile(sorted_values, 0.50),
                          quantile(sorted_values, 0.75)};
}

Dispersion population_dispersion(std::span<const double> values) {
    if (values.empty()) throw EmptyInput("dispersion");
    Dispersion d;
    for (double v : values) d.mean += v;
    d.mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - d.mean) * (v - d.mean);
    d.stddev = std::sqrt(ss / static_cast<double>(values.size()));
    d.cv = d.mean != 0.0 ? d.stddev / d.mean : 0.0;
    return d;
}

}  // namespace sdgsrrf::stats
