#pragma once

#include "sdgsrrf/types.hpp"

#include <vector>

namespace sdgsrrf {

/// Min-max rescaling of a raw value to [0, 100]. Positive polarity maps g1
/// to 0 and g2 to 100; negative polarity inverts the direction. Values
/// outside [g1, g2] are clamped and *clamped is set when provided. Throws
/// NonFiniteInput.
double normalize_score(double x, const Goalposts& gp, Polarity polarity,
                       bool* clamped = nullptr);

/// Inverse of normalize_score on [g1, g2].
double denormalize_score(double score, const Goalposts& gp, Polarity polarity);

NormalizedValue normalize_observation(const Observation& obs, const Goalposts& gp,
                                      Polarity polarity);

/// Normalizes every observation of a panel; imputed flags propagate. Throws
/// MissingGoalposts when an indicator lacks goalposts or a definition.
/// Clamp events are appended to *warnings when provided.
NormalizedPanel normalize_panel(const Panel& panel, const GoalpostSet& goalposts,
                                const IndicatorCatalog& defs,
                                std::vector<Warning>* warnings = nullptr);

}  // namespace sdgsrrf
