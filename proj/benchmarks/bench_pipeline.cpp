#include "sdgsrrf/composite.hpp"
#include "sdgsrrf/goalposts.hpp"
#include "sdgsrrf/normalize.hpp"
#include "sdgsrrf/panel_io.hpp"
#include "sdgsrrf/stats.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace sdgsrrf;

namespace {

Panel synthetic_panel(int indicators, int geos, int years) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> value(1.0, 500.0);
    std::vector<Observation> obs;
    obs.reserve(static_cast<std::size_t>(indicators) * geos * years);
    for (int i = 0; i < indicators; ++i)
        for (int g = 0; g < geos; ++g)
            for (int y = 0; y < years; ++y)
                obs.emplace_back("C" + std::to_string(i + 1), "G" + std::to_string(g),
                                 2000 + y, value(rng));
    return Panel::infer(std::move(obs));
}

}  // namespace

static void BM_quartiles(benchmark::State& state) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> value(0.0, 100.0);
    std::vector<double> sample(static_cast<std::size_t>(state.range(0)));
    for (double& v : sample) v = value(rng);
    std::sort(sample.begin(), sample.end());
    for (auto _ : state) benchmark::DoNotOptimize(stats::quartiles(sample));
}
BENCHMARK(BM_quartiles)->Arg(32)->Arg(1024)->Arg(65536);

static void BM_pool_and_derive(benchmark::State& state) {
    Panel panel = synthetic_panel(14, static_cast<int>(state.range(0)), 22);
    std::vector<std::string> universe(panel.geos().begin(), panel.geos().end());
    IndicatorDef def("C1", "bench", "u", Polarity::Positive, 0.0, std::nullopt);
    for (auto _ : state) {
        DistributionStats s = pool_distribution(panel, "C1", universe, 2000);
        benchmark::DoNotOptimize(derive_goalposts(s, def));
    }
}
BENCHMARK(BM_pool_and_derive)->Arg(8)->Arg(32);

static void BM_normalize_panel(benchmark::State& state) {
    Panel panel = synthetic_panel(11, static_cast<int>(state.range(0)), 8);
    std::vector<Goalposts> gp;
    std::vector<IndicatorDef> defs;
    for (int i = 0; i < 11; ++i) {
        gp.emplace_back("C" + std::to_string(i + 1), 0.0, 500.0);
        defs.emplace_back("C" + std::to_string(i + 1), "bench", "u",
                          i % 2 ? Polarity::Negative : Polarity::Positive, 0.0, std::nullopt);
    }
    GoalpostSet goalposts(std::move(gp));
    IndicatorCatalog catalog(std::move(defs));
    for (auto _ : state)
        benchmark::DoNotOptimize(normalize_panel(panel, goalposts, catalog));
}
BENCHMARK(BM_normalize_panel)->Arg(4)->Arg(64);

static void BM_index_series(benchmark::State& state) {
    const int geos = static_cast<int>(state.range(0));
    Panel panel = synthetic_panel(11, geos, 8);
    std::vector<Goalposts> gp;
    std::vector<IndicatorDef> defs;
    IndexOptions options;
    for (int i = 0; i < 11; ++i) {
        const std::string code = "C" + std::to_string(i + 1);
        gp.emplace_back(code, 0.0, 500.0);
        defs.emplace_back(code, "bench", "u", Polarity::Positive, 0.0, std::nullopt);
        options.indicators.push_back(code);
    }
    NormalizedPanel normalized =
        normalize_panel(panel, GoalpostSet(std::move(gp)), IndicatorCatalog(std::move(defs)));
    std::vector<std::string> all_geos(normalized.geos().begin(), normalized.geos().end());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            compute_index_series(normalized, all_geos, {2000, 2007}, options));
}
BENCHMARK(BM_index_series)->Arg(4)->Arg(64);

BENCHMARK_MAIN();
