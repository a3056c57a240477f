#pragma once

#include "sdgsrrf/types.hpp"

#include <span>
#include <string>
#include <vector>

// Decomposition of index changes and cross-country gaps. With a geometric
// mean, the log of the index ratio splits additively over indicators and the
// ratio itself splits multiplicatively; both forms are returned.

namespace sdgsrrf {

struct Contribution {
    std::string indicator;
    double log_contribution = 0.0;  // (w_i / sum w) * ln(s2_i / s1_i)
    double factor = 1.0;            // (s2_i / s1_i)^(w_i / sum w)
};

struct TemporalDecomposition {
    double log_ratio = 0.0;  // ln(I(t2) / I(t1)) = sum of log contributions
    double factor = 1.0;     // I(t2) / I(t1) = product of factors
    std::vector<Contribution> contributions;
};

/// Decomposes the index change between two dates into per-indicator
/// contributions. All scores must be strictly positive; throws ZeroScore.
TemporalDecomposition decompose_temporal(std::span<const std::string> indicators,
                                         std::span<const double> scores_from,
                                         std::span<const double> scores_to,
                                         std::span<const double> weights = {});

struct CrossCountryDecomposition {
    double ratio = 1.0;      // I_a / I_b = product of factors
    double log_ratio = 0.0;
    std::vector<Contribution> contributions;  // factor_i = (a_i / b_i)^(w_i / sum w)
};

/// Decomposes the ratio of two countries' indices into per-indicator factors.
CrossCountryDecomposition decompose_cross_country(std::span<const std::string> indicators,
                                                  std::span<const double> scores_a,
                                                  std::span<const double> scores_b,
                                                  std::span<const double> weights = {});

struct GapRow {
    int year = 0;
    double range = 0.0;  // max - min over geographies
    std::string max_geo;
    std::string min_geo;
    double mean = 0.0;
    double cv = 0.0;  // population coefficient of variation (extension)
    int n_geos = 0;
};

/// Per-year spread of the composite index across geographies. Every year
/// covered by any series must have at least two values; throws
/// InsufficientGeos naming the first year that does not.
std::vector<GapRow> gap_metrics(std::span<const CompositeSeries> series);

}  // namespace sdgsrrf
