#include "sdgsrrf/normalize.hpp"

#include "sdgsrrf/csv.hpp"
#include "sdgsrrf/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sdgsrrf {

double normalize_score(double x, const Goalposts& gp, Polarity polarity, bool* clamped) {
    if (!std::isfinite(x)) throw NonFiniteInput("raw value for " + gp.indicator());
    double score = polarity == Polarity::Positive
                       ? 100.0 * (x - gp.g1()) / gp.span()
                       : 100.0 * (gp.g2() - x) / gp.span();
    bool out_of_range = score < 0.0 || score > 100.0;
    if (clamped) *clamped = out_of_range;
    return std::clamp(score, 0.0, 100.0);
}

double denormalize_score(double score, const Goalposts& gp, Polarity polarity) {
    if (!std::isfinite(score)) throw NonFiniteInput("score for " + gp.indicator());
    return polarity == Polarity::Positive ? gp.g1() + score / 100.0 * gp.span()
                                          : gp.g2() - score / 100.0 * gp.span();
}

NormalizedValue normalize_observation(const Observation& obs, const Goalposts& gp,
                                      Polarity polarity) {
    bool clamped = false;
    double score = normalize_score(obs.value(), gp, polarity, &clamped);
    return NormalizedValue(obs.indicator(), obs.geo(), obs.year(), score, clamped,
                           obs.imputed());
}

NormalizedPanel normalize_panel(const Panel& panel, const GoalpostSet& goalposts,
                                const IndicatorCatalog& defs,
                                std::vector<Warning>* warnings) {
    std::vector<NormalizedValue> values;
    values.reserve(panel.size());
    for (const Observation& obs : panel.observations()) {
        const Goalposts& gp = goalposts.at(obs.indicator());
        const IndicatorDef& def = defs.at(obs.indicator());
        NormalizedValue nv = normalize_observation(obs, gp, def.polarity());
        if (nv.clamped() && warnings)
            warnings->push_back(Warning{
                "clamped", "raw value " + csv::format_double(obs.value()) + " for (" +
                               obs.indicator() + ", " + obs.geo() + ", " +
                               std::to_string(obs.year()) + ") lies outside the goalposts"});
        values.push_back(std::move(nv));
    }
    return NormalizedPanel(std::move(values));
}

}  // namespace sdgsrrf
