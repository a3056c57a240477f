#include "sdgsrrf/goalposts.hpp"

#include "sdgsrrf/stats.hpp"
#include "support/reference_data.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace sdgsrrf;

TEST_CASE("quartiles interpolate linearly between order statistics") {
    const std::vector<double> five{1, 2, 3, 4, 5};
    auto q = stats::quartiles(five);
    CHECK(q.q1 == doctest::Approx(2.0));
    CHECK(q.median == doctest::Approx(3.0));
    CHECK(q.q3 == doctest::Approx(4.0));

    const std::vector<double> one{7};
    q = stats::quartiles(one);
    CHECK(q.q1 == 7.0);
    CHECK(q.median == 7.0);
    CHECK(q.q3 == 7.0);

    const std::vector<double> two{0, 100};
    q = stats::quartiles(two);
    CHECK(q.q1 == doctest::Approx(25.0));
    CHECK(q.median == doctest::Approx(50.0));
    CHECK(q.q3 == doctest::Approx(75.0));

    const std::vector<double> four{1, 2, 3, 4};
    q = stats::quartiles(four);
    CHECK(q.q1 == doctest::Approx(1.75));
    CHECK(q.median == doctest::Approx(2.5));
    CHECK(q.q3 == doctest::Approx(3.25));

    CHECK_THROWS_AS(stats::quartiles(std::vector<double>{}), EmptyInput);
}

TEST_CASE("quartiles are ordered for any sorted sample") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    for (int round = 0; round < 300; ++round) {
        std::vector<double> sample(1 + rng() % 30);
        for (double& v : sample) v = value(rng);
        std::sort(sample.begin(), sample.end());
        auto q = stats::quartiles(sample);
        CHECK(sample.front() <= q.q1);
        CHECK(q.q1 <= q.median);
        CHECK(q.median <= q.q3);
        CHECK(q.q3 <= sample.back());
    }
}

TEST_CASE("tukey fences shift the quartiles by 1.5 IQR") {
    DistributionStats c14("C14", 13.9, 31.5, 35.9, 40.0, 45.8, 31);
    auto f = tukey_fences(c14);
    CHECK(f.lower == doctest::Approx(18.75));
    CHECK(f.upper == doctest::Approx(52.75));

    DistributionStats zero_iqr("X", 1.0, 5.0, 5.0, 5.0, 9.0, 4);
    f = tukey_fences(zero_iqr);
    CHECK(f.lower == doctest::Approx(5.0));
    CHECK(f.upper == doctest::Approx(5.0));

    DistributionStats c12("C12", 205.4, 364.9, 536.0, 667.9, 911.6, 31);
    CHECK(tukey_fences(c12).upper == doctest::Approx(1122.4));
}

TEST_CASE("derive_goalposts picks the more extreme bound, then clips") {
    auto defs = refdata::reference_catalog();

    // lower fence beats the observed min but the natural floor wins; the
    // observed max beats the upper fence
    DistributionStats c1("C1", 40.9, 118.7, 163.5, 248.9, 769.6, 31);
    Goalposts g = derive_goalposts(c1, defs.at("C1"));
    CHECK(g.g1() == 0.0);
    CHECK(g.g1_origin() == GoalpostOrigin::NaturalBoundClip);
    CHECK(g.g2() == doctest::Approx(769.6));
    CHECK(g.g2_origin() == GoalpostOrigin::ObservedExtremum);

    // upper fence beats the max and then hits the ceiling
    DistributionStats c5("C5", 3.8, 40.7, 69.3, 85.9, 98.6, 31);
    g = derive_goalposts(c5, defs.at("C5"));
    CHECK(g.g1() == 0.0);
    CHECK(g.g2() == 100.0);
    CHECK(g.g2_origin() == GoalpostOrigin::NaturalBoundClip);

    // observed min is more extreme than the lower fence; fence wins above
    DistributionStats c14("C14", 13.9, 31.5, 35.9, 40.0, 45.8, 31);
    g = derive_goalposts(c14, defs.at("C14"));
    CHECK(g.g1() == doctest::Approx(13.9));
    CHECK(g.g1_origin() == GoalpostOrigin::ObservedExtremum);
    CHECK(g.g2() == doctest::Approx(52.75));
    CHECK(g.g2_origin() == GoalpostOrigin::TukeyFence);
}

TEST_CASE("degenerate bounds are rejected") {
    IndicatorDef def("X", "constant", "u", Polarity::Positive, 0.0, std::nullopt);
    DistributionStats constant("X", 0.0, 0.0, 0.0, 0.0, 0.0, 5);
    CHECK_THROWS_AS(derive_goalposts(constant, def), DegenerateGoalposts);
}

TEST_CASE("derived bounds reproduce the reference table within 0.2") {
    auto defs = refdata::reference_catalog();
    for (const auto& row : refdata::kStats) {
        DistributionStats s(row.code, row.min, row.q1, row.median, row.q3, row.max, 31);
        Goalposts g = derive_goalposts(s, defs.at(row.code));
        CHECK_MESSAGE(std::abs(g.g1() - row.g1) <= 0.2, row.code, " g1 ", g.g1());
        CHECK_MESSAGE(std::abs(g.g2() - row.g2) <= 0.2, row.code, " g2 ", g.g2());
    }
}

TEST_CASE("goalposts cover the observed range unless clipped by a natural bound") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> value(-30.0, 130.0);
    IndicatorDef bounded("B", "pct", "pct", Polarity::Positive, 0.0, 100.0);
    IndicatorDef unbounded("U", "level", "u", Polarity::Positive);
    for (int round = 0; round < 300; ++round) {
        std::vector<double> sample(2 + rng() % 25);
        for (double& v : sample) v = value(rng);
        std::sort(sample.begin(), sample.end());
        if (sample.front() == sample.back()) continue;
        auto q = stats::quartiles(sample);
        DistributionStats s("U", sample.front(), q.q1, q.median, q.q3, sample.back(),
                            sample.size());
        Goalposts gu = derive_goalposts(s, unbounded);
        CHECK(gu.g1() <= sample.front());
        CHECK(gu.g2() >= sample.back());

        DistributionStats sb("B", sample.front(), q.q1, q.median, q.q3, sample.back(),
                             sample.size());
        try {
            Goalposts gb = derive_goalposts(sb, bounded);
            CHECK((gb.g1() <= sample.front() ||
                   gb.g1_origin() == GoalpostOrigin::NaturalBoundClip));
            CHECK((gb.g2() >= sample.back() ||
                   gb.g2_origin() == GoalpostOrigin::NaturalBoundClip));
        } catch (const DegenerateGoalposts&) {
            // possible when the whole sample sits outside the natural bounds
        }
    }
}

// Enlarging the pool monotonically widens the observed extremes, and the
// pre-clip interval always covers them. Note the interval itself is not
// monotone under pool growth: points added in the middle of the distribution
// can shrink the IQR and pull a binding fence inwards (e.g. {0, 100} plus
// five 50s moves the pre-clip interval from [-50, 150] to [0, 100]).
TEST_CASE("pool growth widens the observed extremes; the interval covers them") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> value(-100.0, 100.0);
    for (int round = 0; round < 200; ++round) {
        std::vector<double> sample(4 + rng() % 20);
        for (double& v : sample) v = value(rng);
        std::vector<double> enlarged = sample;
        for (int extra = 0; extra < 5; ++extra) enlarged.push_back(value(rng));
        std::sort(sample.begin(), sample.end());
        std::sort(enlarged.begin(), enlarged.end());
        CHECK(enlarged.front() <= sample.front());
        CHECK(enlarged.back() >= sample.back());
        auto q = stats::quartiles(enlarged);
        DistributionStats s("U", enlarged.front(), q.q1, q.median, q.q3, enlarged.back(),
                            enlarged.size());
        auto f = tukey_fences(s);
        CHECK(std::min(enlarged.front(), f.lower) <= enlarged.front());
        CHECK(std::max(enlarged.back(), f.upper) >= enlarged.back());
    }

    // the documented narrowing counterexample
    const std::vector<double> small{0.0, 100.0};
    auto qs = stats::quartiles(small);
    DistributionStats s1("U", 0.0, qs.q1, qs.median, qs.q3, 100.0, 2);
    const std::vector<double> grown{0.0, 50.0, 50.0, 50.0, 50.0, 50.0, 100.0};
    auto qg = stats::quartiles(grown);
    DistributionStats s2("U", 0.0, qg.q1, qg.median, qg.q3, 100.0, 7);
    CHECK(tukey_fences(s1).lower < tukey_fences(s2).lower);  // fence moved inwards
}
