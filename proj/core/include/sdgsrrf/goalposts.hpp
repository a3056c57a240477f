#pragma once

#include "sdgsrrf/types.hpp"

namespace sdgsrrf {

struct TukeyFences {
    double lower = 0.0;  // q1 - 1.5 * IQR
    double upper = 0.0;  // q3 + 1.5 * IQR
};

TukeyFences tukey_fences(const DistributionStats& stats);

/// Derives fixed normalization bounds from pooled statistics. Each endpoint
/// is the more extreme of the observed extremum and the Tukey fence, then
/// clipped to the indicator's natural floor/ceiling; the comparison happens
/// before the clip. The origin of each endpoint records which branch won.
/// Throws DegenerateGoalposts when the bounds collapse after clipping.
Goalposts derive_goalposts(const DistributionStats& stats, const IndicatorDef& def);

}  // namespace sdgsrrf
