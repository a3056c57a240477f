#pragma once

#include <span>

namespace sdgsrrf::stats {

struct QuartileTriple {
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
};

/// Quantile of an ascending-sorted sample by linear interpolation between
/// order statistics (the R type-7 convention, fixed repo-wide). p in [0, 1].
double quantile(std::span<const double> sorted_values, double p);

/// First quartile, median and third quartile of an ascending-sorted sample.
/// Throws EmptyInput on an empty span.
QuartileTriple quartiles(std::span<const double> sorted_values);

struct Dispersion {
    double mean = 0.0;
    double stddev = 0.0;  // population convention (divide by n)
    double cv = 0.0;      // stddev / mean, 0 when the mean is 0
};

Dispersion population_dispersion(std::span<const double> values);

}  // namespace sdgsrrf::stats
