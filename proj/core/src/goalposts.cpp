#include "sdgsrrf/goalposts.hpp"

namespace sdgsrrf {

TukeyFences tukey_fences(const DistributionStats& stats) {
    const double iqr = stats.q3() - stats.q1();
    return TukeyFences{stats.q1() - 1.5 * iqr, stats.q3() + 1.5 * iqr};
}

Goalposts derive_goalposts(const DistributionStats& stats, const IndicatorDef& def) {
    const TukeyFences fences = tukey_fences(stats);

    double g1 = stats.min();
    GoalpostOrigin g1_origin = GoalpostOrigin::ObservedExtremum;
    if (fences.lower < g1) {
        g1 = fences.lower;
        g1_origin = GoalpostOrigin::TukeyFence;
    }
    if (def.natural_floor() && g1 < *def.natural_floor()) {
        g1 = *def.natural_floor();
        g1_origin = GoalpostOrigin::NaturalBoundClip;
    }

    double g2 = stats.max();
    GoalpostOrigin g2_origin = GoalpostOrigin::ObservedExtremum;
    if (fences.upper > g2) {
        g2 = fences.upper;
        g2_origin = GoalpostOrigin::TukeyFence;
    }
    if (def.natural_ceiling() && g2 > *def.natural_ceiling()) {
        g2 = *def.natural_ceiling();
        g2_origin = GoalpostOrigin::NaturalBoundClip;
    }

    if (!(g1 < g2)) throw DegenerateGoalposts(stats.indicator(), g1, g2);
    return Goalposts(stats.indicator(), g1, g2, g1_origin, g2_origin);
}

}  // namespace sdgsrrf
