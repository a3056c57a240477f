#pragma once

#include "sdgsrrf/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sdgsrrf {

/// Weighted geometric mean (prod score_i^{w_i})^{1/sum w}. Scores must be
/// non-negative; a zero score makes the result exactly 0. Empty weights mean
/// equal weighting. Throws NegativeScore or EmptyInput.
double geometric_mean(std::span<const double> scores, std::span<const double> weights = {});

struct IndexOptions {
    std::vector<std::string> indicators;  // aggregation set, non-empty
    std::vector<double> weights;          // parallel to indicators; empty = all 1
    std::optional<double> zero_floor;     // replace exact zeros before aggregating
};

/// Scores for one (geo, year) cell in indicator-set order. Throws MissingCell
/// listing every gap.
std::vector<double> gather_scores(const NormalizedPanel& panel, const std::string& geo,
                                  int year, std::span<const std::string> indicators);

/// Composite index per geography over the year range. Every indicator of the
/// set must have a score for every (geo, year); gaps are reported together in
/// one MissingCell error. Zero components propagate to a 0 index and emit a
/// warning naming the indicator (unless zero_floor substitutes them).
std::vector<CompositeSeries> compute_index_series(const NormalizedPanel& panel,
                                                  std::span<const std::string> geos,
                                                  YearRange years, const IndexOptions& options,
                                                  std::vector<Warning>* warnings = nullptr);

}  // namespace sdgsrrf
