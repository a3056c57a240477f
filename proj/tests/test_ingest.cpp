#include "sdgsrrf/panel_io.hpp"

#include "sdgsrrf/table_io.hpp"

#include "sdgsrrf/csv.hpp"
#include "sdgsrrf/errors.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>
#include <sstream>

using namespace sdgsrrf;

namespace {

Panel parse(const std::string& text) {
    std::istringstream in(text);
    return parse_panel(in);
}

}  // namespace

TEST_CASE("parse_panel reads tidy rows") {
    Panel p = parse("indicator,geo,year,value\nC11,IT,2014,12.9\n");
    REQUIRE(p.size() == 1);
    const Observation& obs = p.observations()[0];
    CHECK(obs.indicator() == "C11");
    CHECK(obs.geo() == "IT");
    CHECK(obs.year() == 2014);
    CHECK(obs.value() == doctest::Approx(12.9));
    CHECK_FALSE(obs.imputed());
}

TEST_CASE("blank or NA value cells are missing, not zero") {
    Panel p = parse("indicator,geo,year,value\nC1,IT,2014,\nC1,IT,2015,NA\nC1,IT,2016,3.5\n");
    CHECK(p.size() == 1);
    CHECK(p.find("C1", "IT", 2014) == nullptr);
    CHECK(p.find("C1", "IT", 2016) != nullptr);
}

TEST_CASE("duplicate keys are rejected") {
    CHECK_THROWS_AS(parse("indicator,geo,year,value\nC1,IT,2014,1\nC1,IT,2014,2\n"),
                    DuplicateKey);
}

TEST_CASE("malformed rows carry the line number") {
    try {
        parse("indicator,geo,year,value\nC1,IT,2014,1\nC1,IT,oops,2\n");
        FAIL("expected MalformedRow");
    } catch (const MalformedRow& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse("indicator,geo,year,value\nC1,IT,2014\n"), MalformedRow);
    CHECK_THROWS_AS(parse("indicator,geo,value\n"), MalformedRow);  // missing year column
    CHECK_THROWS_AS(parse(""), MalformedRow);
}

TEST_CASE("non-finite values are rejected as such") {
    CHECK_THROWS_AS(parse("indicator,geo,year,value\nC1,IT,2014,inf\n"), NonFiniteValue);
    CHECK_THROWS_AS(parse("indicator,geo,year,value\nC1,IT,2014,-inf\n"), NonFiniteValue);
}

TEST_CASE("optional imputed column is honoured") {
    Panel p = parse("indicator,geo,year,value,imputed\nC3,IT,2021,4.5,true\n");
    CHECK(p.observations()[0].imputed());
}

TEST_CASE("write/parse round trip preserves the panel") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> value(-1e4, 1e4);
    std::vector<Observation> obs;
    const std::vector<std::string> indicators{"C1", "C2", "C10"};
    const std::vector<std::string> geos{"IT", "FR", "EL"};
    for (const auto& i : indicators)
        for (const auto& g : geos)
            for (int year = 2014; year <= 2021; ++year)
                if (rng() % 4 != 0)
                    obs.emplace_back(i, g, year, value(rng), rng() % 2 == 0);
    Panel original = Panel::infer(std::move(obs));

    std::ostringstream out;
    write_panel(out, original);
    Panel reparsed = parse(out.str());

    REQUIRE(reparsed.size() == original.size());
    for (std::size_t i = 0; i < original.size(); ++i) {
        const Observation& a = original.observations()[i];
        const Observation& b = reparsed.observations()[i];
        CHECK(a.indicator() == b.indicator());
        CHECK(a.geo() == b.geo());
        CHECK(a.year() == b.year());
        CHECK(a.value() == b.value());  // exact: full-precision formatting
        CHECK(a.imputed() == b.imputed());
    }
}

TEST_CASE("quoted fields round-trip through the csv layer") {
    using namespace sdgsrrf;
    std::vector<IndicatorDef> defs;
    defs.emplace_back("C1", "commas, \"quotes\" and\nnewlines", "KGOE/1000 EUR",
                      Polarity::Negative, 0.0, std::nullopt);
    IndicatorCatalog catalog(std::move(defs));
    std::ostringstream out;
    write_indicator_defs(out, catalog);
    std::istringstream in(out.str());
    IndicatorCatalog back = read_indicator_defs(in);
    CHECK(back.at("C1").description() == "commas, \"quotes\" and\nnewlines");
    CHECK(back.at("C1").polarity() == Polarity::Negative);
}

TEST_CASE("locf tolerates duplicated indicator lists") {
    Panel p = parse("indicator,geo,year,value\nC3,IT,2020,4.4\nC1,IT,2021,1\n");
    const std::vector<std::string> twice{"C3", "C3"};
    Panel filled = impute_locf(p, 2021, twice);
    CHECK(filled.size() == 3);
    CHECK(filled.find("C3", "IT", 2021)->imputed());
}

TEST_CASE("json export mirrors the csv fields") {
    Panel p = parse("indicator,geo,year,value,imputed\nC3,IT,2021,4.5,true\nC1,FR,2014,2,0\n");
    std::ostringstream out;
    write_panel_json(out, p);
    auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["indicator"] == "C1");  // sorted by key
    CHECK(doc[0]["geo"] == "FR");
    CHECK(doc[0]["year"] == 2014);
    CHECK(doc[0]["value"] == 2.0);
    CHECK(doc[0]["imputed"] == false);
    CHECK(doc[1]["indicator"] == "C3");
    CHECK(doc[1]["imputed"] == true);
}

TEST_CASE("locf fills the gap from the most recent earlier value") {
    Panel p = parse(
        "indicator,geo,year,value\n"
        "C3,IT,2019,0.1\nC3,IT,2020,4.4\n"
        "C12,IT,2020,275.5\n"
        "C1,IT,2021,98.5\n");  // keeps 2021 inside the declared range
    const std::vector<std::string> targets{"C3", "C12"};
    Panel filled = impute_locf(p, 2021, targets);

    const Observation* c3 = filled.find("C3", "IT", 2021);
    REQUIRE(c3 != nullptr);
    CHECK(c3->value() == doctest::Approx(4.4));  // 2020, not 2019
    CHECK(c3->imputed());
    const Observation* c12 = filled.find("C12", "IT", 2021);
    REQUIRE(c12 != nullptr);
    CHECK(c12->value() == doctest::Approx(275.5));
    CHECK(c12->imputed());
}

TEST_CASE("locf leaves fully missing series missing and is idempotent") {
    Panel p = parse(
        "indicator,geo,year,value\n"
        "C3,IT,2020,4.4\nC3,FR,2020,\nC1,FR,2021,100\n");
    const std::vector<std::string> targets{"C3"};
    Panel once = impute_locf(p, 2021, targets);
    CHECK(once.find("C3", "FR", 2021) == nullptr);  // nothing to carry for FR
    CHECK(once.find("C3", "IT", 2021) != nullptr);

    Panel twice = impute_locf(once, 2021, targets);
    REQUIRE(twice.size() == once.size());
    for (std::size_t i = 0; i < once.size(); ++i)
        CHECK(once.observations()[i].value() == twice.observations()[i].value());
}

TEST_CASE("locf never alters existing values") {
    Panel p = parse(
        "indicator,geo,year,value\n"
        "C3,IT,2020,4.4\nC3,IT,2021,9.9\n");
    const std::vector<std::string> targets{"C3"};
    Panel filled = impute_locf(p, 2021, targets);
    CHECK(filled.find("C3", "IT", 2021)->value() == doctest::Approx(9.9));
    CHECK_FALSE(filled.find("C3", "IT", 2021)->imputed());
}

TEST_CASE("locf rejects a target year outside the declared range") {
    Panel p = parse("indicator,geo,year,value\nC3,IT,2020,4.4\n");
    const std::vector<std::string> targets{"C3"};
    CHECK_THROWS_AS(impute_locf(p, 2021, targets), Error);
}

TEST_CASE("pool_distribution summarizes the filtered pool") {
    // five values whose order statistics reproduce one published row exactly
    Panel p = parse(
        "indicator,geo,year,value\n"
        "C14,AT,2019,13.9\nC14,BE,2019,31.5\nC14,CY,2019,35.9\n"
        "C14,DE,2019,40\nC14,EL,2019,45.8\n");
    const std::vector<std::string> universe{"AT", "BE", "CY", "DE", "EL"};
    DistributionStats s = pool_distribution(p, "C14", universe, 2000);
    CHECK(s.min() == doctest::Approx(13.9));
    CHECK(s.q1() == doctest::Approx(31.5));
    CHECK(s.median() == doctest::Approx(35.9));
    CHECK(s.q3() == doctest::Approx(40.0));
    CHECK(s.max() == doctest::Approx(45.8));
    CHECK(s.n() == 5);
}

TEST_CASE("pool_distribution handles degenerate and small pools") {
    Panel p = parse("indicator,geo,year,value\nC1,IT,2014,5\n");
    const std::vector<std::string> it{"IT"};
    DistributionStats s = pool_distribution(p, "C1", it, 2000);
    CHECK(s.min() == 5.0);
    CHECK(s.q1() == 5.0);
    CHECK(s.median() == 5.0);
    CHECK(s.q3() == 5.0);
    CHECK(s.max() == 5.0);

    Panel four = parse(
        "indicator,geo,year,value\n"
        "C1,AT,2014,1\nC1,BE,2014,2\nC1,CY,2014,3\nC1,DE,2014,4\n");
    const std::vector<std::string> universe{"AT", "BE", "CY", "DE"};
    DistributionStats q = pool_distribution(four, "C1", universe, 2000);
    CHECK(q.min() == 1.0);
    CHECK(q.median() == doctest::Approx(2.5));
    CHECK(q.max() == 4.0);
}

TEST_CASE("pool_distribution respects filters and reports empty pools") {
    Panel p = parse(
        "indicator,geo,year,value,imputed\n"
        "C1,IT,1999,50,false\n"       // before year_min
        "C1,FR,2014,60,true\n"        // imputed
        "C1,UK,2014,70,false\n");     // outside the universe
    const std::vector<std::string> universe{"IT", "FR"};
    CHECK_THROWS_AS(pool_distribution(p, "C1", universe, 2000), EmptyPool);
    CHECK_THROWS_AS(pool_distribution(p, "C9", universe, 2000), EmptyPool);

    DistributionStats with_imputed = pool_distribution(p, "C1", universe, 2000, true);
    CHECK(with_imputed.n() == 1);
    CHECK(with_imputed.median() == 60.0);
}

TEST_CASE("pooled output always satisfies the stats ordering invariant") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> value(-100.0, 100.0);
    const std::vector<std::string> geos{"A", "B", "C", "D", "E", "F"};
    for (int round = 0; round < 200; ++round) {
        std::vector<Observation> obs;
        const int n = 1 + static_cast<int>(rng() % 40);
        for (int k = 0; k < n; ++k)
            obs.emplace_back("X", geos[k % geos.size()], 2000 + k, value(rng));
        Panel p = Panel::infer(std::move(obs));
        DistributionStats s = pool_distribution(p, "X", geos, 1990);
        CHECK(s.min() <= s.q1());
        CHECK(s.q1() <= s.median());
        CHECK(s.median() <= s.q3());
        CHECK(s.q3() <= s.max());
    }
}
