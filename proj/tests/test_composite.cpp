#include "sdgsrrf/composite.hpp"

#include "support/reference_data.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace sdgsrrf;

TEST_CASE("published endpoint vectors aggregate to the published index") {
    // 0.15 absorbs the one-decimal rounding of the published scores (the
    // Italy 2014 vector lands 0.105 off, dominated by the tiny C3 cell)
    for (const auto& cell : refdata::kComposite) {
        auto scores = refdata::published_vector(cell.geo, cell.year);
        CHECK_MESSAGE(std::abs(geometric_mean(scores) - cell.value) <= 0.15, cell.geo, " ",
                      cell.year);
    }
    CHECK(std::abs(geometric_mean(refdata::published_vector("FR", 2021)) - 50.3) <= 0.1);
}

TEST_CASE("mean of constants is the constant; single score passes through") {
    const std::vector<double> constants{42.0, 42.0, 42.0};
    CHECK(geometric_mean(constants) == doctest::Approx(42.0));
    const std::vector<double> one{7.5};
    CHECK(geometric_mean(one) == doctest::Approx(7.5));
}

TEST_CASE("zero scores collapse the mean to zero; negatives are rejected") {
    const std::vector<double> with_zero{10.0, 0.0, 50.0};
    CHECK(geometric_mean(with_zero) == 0.0);
    const std::vector<double> negative{10.0, -1.0};
    CHECK_THROWS_AS(geometric_mean(negative), NegativeScore);
    CHECK_THROWS_AS(geometric_mean(std::vector<double>{}), EmptyInput);
    const std::vector<double> scores{1.0, 2.0};
    const std::vector<double> bad_weights{1.0};
    CHECK_THROWS_AS(geometric_mean(scores, bad_weights), ValidationError);
}

TEST_CASE("geometric mean properties on random vectors") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> score(0.5, 100.0);
    std::uniform_real_distribution<double> weight(0.1, 5.0);
    std::uniform_real_distribution<double> factor(0.2, 3.0);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 1 + rng() % 15;
        std::vector<double> scores(n), weights(n);
        for (std::size_t i = 0; i < n; ++i) {
            scores[i] = score(rng);
            weights[i] = weight(rng);
        }
        const double gm = geometric_mean(scores, weights);

        // internality
        const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
        CHECK(gm >= *lo - 1e-9);
        CHECK(gm <= *hi + 1e-9);

        // permutation invariance
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<double> ps(n), pw(n);
        for (std::size_t i = 0; i < n; ++i) {
            ps[i] = scores[perm[i]];
            pw[i] = weights[perm[i]];
        }
        CHECK(geometric_mean(ps, pw) == doctest::Approx(gm).epsilon(1e-12));

        // equal-percentage impact of a single component
        const std::size_t k = rng() % n;
        const double f = factor(rng);
        std::vector<double> scaled = scores;
        scaled[k] *= f;
        const double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
        CHECK(geometric_mean(scaled, weights) ==
              doctest::Approx(gm * std::pow(f, weights[k] / wsum)).epsilon(1e-11));

        // not fully compensative: GM <= AM, equal only for constant vectors
        const double am =
            std::inner_product(scores.begin(), scores.end(), weights.begin(), 0.0) / wsum;
        CHECK(gm <= am + 1e-9);
        if (*hi - *lo > 1e-6) CHECK(gm < am);
    }
    const std::vector<double> equal{33.3, 33.3, 33.3};
    CHECK(std::abs(geometric_mean(equal) -
                   std::accumulate(equal.begin(), equal.end(), 0.0) / 3.0) < 1e-12);
}

namespace {

NormalizedPanel endpoint_panel() {
    std::vector<NormalizedValue> values;
    for (const auto& cell : refdata::kNormalized)
        values.emplace_back(cell.code, cell.geo, cell.year, cell.score);
    return NormalizedPanel(std::move(values));
}

}  // namespace

TEST_CASE("compute_index_series reproduces the reference endpoints") {
    NormalizedPanel panel = endpoint_panel();
    IndexOptions options;
    options.indicators = refdata::kIndexIndicators;

    // the endpoint fixture only covers 2014; compute one year at a time
    for (int year : {2014, 2021}) {
        auto series = compute_index_series(panel, refdata::kGeos, {year, year}, options);
        REQUIRE(series.size() == 4);
        for (const auto& cell : refdata::kComposite) {
            if (cell.year != year) continue;
            auto it = std::find_if(series.begin(), series.end(),
                                   [&](const CompositeSeries& s) { return s.geo() == cell.geo; });
            REQUIRE(it != series.end());
            CHECK_MESSAGE(std::abs(*it->value_at(year) - cell.value) <= 0.15, cell.geo, " ",
                          year);
        }
    }
}

TEST_CASE("a full-score panel aggregates to exactly 100") {
    std::vector<NormalizedValue> values;
    for (const std::string& code : refdata::kIndexIndicators)
        values.emplace_back(code, "XX", 2020, 100.0);
    NormalizedPanel panel(std::move(values));
    IndexOptions options;
    options.indicators = refdata::kIndexIndicators;
    const std::vector<std::string> geos{"XX"};
    auto series = compute_index_series(panel, geos, {2020, 2020}, options);
    CHECK(*series[0].value_at(2020) == 100.0);  // no last-ulp overshoot
}

TEST_CASE("a single-indicator set returns that indicator's scores") {
    NormalizedPanel panel = endpoint_panel();
    IndexOptions options;
    options.indicators = {"C5"};
    auto series = compute_index_series(panel, refdata::kGeos, {2014, 2014}, options);
    for (const CompositeSeries& s : series)
        CHECK(*s.value_at(2014) ==
              doctest::Approx(refdata::published_score("C5", s.geo(), 2014)));
}

TEST_CASE("missing cells are all reported at once") {
    NormalizedPanel panel = endpoint_panel();
    IndexOptions options;
    options.indicators = refdata::kIndexIndicators;
    try {
        compute_index_series(panel, refdata::kGeos, {2014, 2015}, options);  // no 2015 data
        FAIL("expected MissingCell");
    } catch (const MissingCell& e) {
        CHECK(e.gaps().size() == 4 * 11);  // every geo and indicator for 2015
        CHECK(std::string(e.what()).find("2015") != std::string::npos);
    }
}

TEST_CASE("zero components warn and zero the index unless floored") {
    std::vector<NormalizedValue> values{NormalizedValue("C1", "IT", 2014, 0.0),
                                        NormalizedValue("C2", "IT", 2014, 50.0)};
    NormalizedPanel panel((std::vector<NormalizedValue>(values)));
    IndexOptions options;
    options.indicators = {"C1", "C2"};
    const std::vector<std::string> geos{"IT"};

    std::vector<Warning> warnings;
    auto series = compute_index_series(panel, geos, {2014, 2014}, options, &warnings);
    CHECK(*series[0].value_at(2014) == 0.0);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].code == "zero_component");
    CHECK(warnings[0].message.find("C1") != std::string::npos);

    options.zero_floor = 1.0;
    warnings.clear();
    series = compute_index_series(panel, geos, {2014, 2014}, options, &warnings);
    CHECK(*series[0].value_at(2014) == doctest::Approx(std::sqrt(50.0)));
    CHECK(warnings.empty());
}
