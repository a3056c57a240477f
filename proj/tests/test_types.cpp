#include "sdgsrrf/types.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace sdgsrrf;

namespace {

bool mentions(const std::exception& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("indicator def rejects inverted natural bounds naming the field") {
    CHECK_NOTHROW(IndicatorDef("C5", "broadband", "pct", Polarity::Positive, 0.0, 100.0));
    try {
        IndicatorDef("C5", "broadband", "pct", Polarity::Positive, 100.0, 100.0);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.field() == "natural_floor");
        CHECK(mentions(e, "natural_floor"));
    }
    CHECK_THROWS_AS(IndicatorDef("", "x", "u", Polarity::Positive), ValidationError);
}

TEST_CASE("observation requires a finite value") {
    CHECK_NOTHROW(Observation("C1", "IT", 2014, 98.5));
    CHECK_THROWS_AS(Observation("C1", "IT", 2014, std::nan("")), ValidationError);
    CHECK_THROWS_AS(Observation("C1", "IT", 2014, 1.0 / 0.0), ValidationError);
    CHECK_THROWS_AS(Observation("", "IT", 2014, 1.0), ValidationError);
}

TEST_CASE("panel enforces key uniqueness and the declared universe") {
    std::vector<Observation> obs{Observation("C1", "IT", 2014, 1.0),
                                 Observation("C1", "IT", 2014, 2.0)};
    CHECK_THROWS_AS(Panel::infer(std::move(obs)), DuplicateKey);

    CHECK_THROWS_AS(Panel({Observation("C1", "FR", 2014, 1.0)}, {"IT"}, {2014, 2021}),
                    ValidationError);
    CHECK_THROWS_AS(Panel({Observation("C1", "IT", 1999, 1.0)}, {"IT"}, {2014, 2021}),
                    ValidationError);

    Panel panel({Observation("C1", "IT", 2014, 1.0), Observation("C1", "FR", 2015, 2.0)},
                {"IT", "FR"}, {2014, 2021});
    CHECK(panel.size() == 2);
    CHECK(panel.geos().size() == 2);
    CHECK(panel.geos()[0] == "FR");  // sorted
    CHECK(panel.find("C1", "IT", 2014)->value() == 1.0);
    CHECK(panel.find("C1", "IT", 2015) == nullptr);
}

TEST_CASE("distribution stats must be ordered") {
    CHECK_NOTHROW(DistributionStats("C14", 13.9, 31.5, 35.9, 40.0, 45.8, 31));
    CHECK_THROWS_AS(DistributionStats("C14", 13.9, 31.5, 31.0, 40.0, 45.8, 31),
                    ValidationError);
    CHECK_THROWS_AS(DistributionStats("C14", 13.9, 31.5, 35.9, 40.0, 45.8, 0),
                    ValidationError);
}

TEST_CASE("goalposts require g1 < g2") {
    CHECK_NOTHROW(Goalposts("C11", 0.0, 27.8));
    CHECK_THROWS_AS(Goalposts("C11", 27.8, 27.8), DegenerateGoalposts);
    CHECK_THROWS_AS(Goalposts("C11", 30.0, 27.8), DegenerateGoalposts);
}

TEST_CASE("normalized value stays in [0, 100]") {
    CHECK_NOTHROW(NormalizedValue("C1", "IT", 2014, 0.0));
    CHECK_NOTHROW(NormalizedValue("C1", "IT", 2014, 100.0));
    CHECK_THROWS_AS(NormalizedValue("C1", "IT", 2014, 100.1), ValidationError);
    CHECK_THROWS_AS(NormalizedValue("C1", "IT", 2014, -0.1), ValidationError);
}

TEST_CASE("composite series validates weights and entries") {
    using Entries = std::vector<std::pair<int, double>>;
    CHECK_NOTHROW(CompositeSeries("IT", Entries{{2014, 23.4}}, {"C1"}, {}));
    CHECK_THROWS_AS(CompositeSeries("IT", Entries{{2014, 23.4}}, {}, {}), ValidationError);
    CHECK_THROWS_AS(CompositeSeries("IT", Entries{{2014, 23.4}}, {"C1"}, {0.0}),
                    ValidationError);
    CHECK_THROWS_AS(CompositeSeries("IT", Entries{{2014, 123.4}}, {"C1"}, {1.0}),
                    ValidationError);
    CHECK_THROWS_AS(CompositeSeries("IT", Entries{{2014, 1.0}, {2014, 2.0}}, {"C1"}, {1.0}),
                    ValidationError);

    CompositeSeries s("IT", Entries{{2015, 24.0}, {2014, 23.4}}, {"C1", "C2"}, {});
    CHECK(s.entries()[0].first == 2014);  // sorted by year
    CHECK(s.value_at(2015) == 24.0);
    CHECK_FALSE(s.value_at(2016).has_value());
    CHECK(s.weights().size() == 2);  // defaulted to 1
}

TEST_CASE("goalpost origin names round-trip") {
    for (auto origin : {GoalpostOrigin::ObservedExtremum, GoalpostOrigin::TukeyFence,
                        GoalpostOrigin::NaturalBoundClip})
        CHECK(goalpost_origin_from_string(to_string(origin)) == origin);
    CHECK_THROWS_AS(goalpost_origin_from_string("nope"), ValidationError);
    CHECK(polarity_from_string("negative") == Polarity::Negative);
    CHECK_THROWS_AS(polarity_from_string("sideways"), ValidationError);
}
