#pragma once

#include "sdgsrrf/analysis.hpp"
#include "sdgsrrf/types.hpp"

#include <iosfwd>
#include <span>
#include <vector>

// CSV readers/writers for the non-panel file surfaces. All writers emit
// deterministic output: stable ordering and shortest round-trip numbers.

namespace sdgsrrf {

/// indicators.csv: code,description,unit,polarity,natural_floor,natural_ceiling
IndicatorCatalog read_indicator_defs(std::istream& in);
void write_indicator_defs(std::ostream& out, const IndicatorCatalog& catalog);

/// stats CSV: indicator,min,q1,median,q3,max,n
std::vector<DistributionStats> read_distribution_stats(std::istream& in);
void write_distribution_stats(std::ostream& out, std::span<const DistributionStats> stats);

/// goalposts CSV: indicator,g1,g2[,g1_origin,g2_origin]; the origin columns
/// are optional on input (published bounds carry no derivation trace).
GoalpostSet read_goalposts(std::istream& in);
void write_goalposts(std::ostream& out, const GoalpostSet& goalposts);

/// normalized CSV: indicator,geo,year,score[,clamped,imputed]
NormalizedPanel read_normalized(std::istream& in);
void write_normalized(std::ostream& out, const NormalizedPanel& panel);

/// composite CSV: geo,year,index (long format, sorted by geo then year)
std::vector<CompositeSeries> read_composite(std::istream& in);
void write_composite(std::ostream& out, std::span<const CompositeSeries> series);

/// wide year-by-geo table for charting: year,<geo1>,<geo2>,...
void write_plot_data(std::ostream& out, std::span<const CompositeSeries> series);

/// gap CSV: year,range,max_geo,min_geo,mean,cv,n_geos
void write_gap_rows(std::ostream& out, std::span<const GapRow> rows);

}  // namespace sdgsrrf
