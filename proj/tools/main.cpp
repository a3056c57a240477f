// sdgs-rrf: build the SDGs-RRF composite index from indicator panels and
// report over the measure <-> indicator <-> SDG mapping.
//
// Subcommands: goalposts, normalize, composite, decompose, gap, report,
// reproduce-paper. Exit status: 0 success, 1 data/validation error, 2 usage.

#include "sdgsrrf/analysis.hpp"
#include "sdgsrrf/composite.hpp"
#include "sdgsrrf/config.hpp"
#include "sdgsrrf/csv.hpp"
#include "sdgsrrf/goalposts.hpp"
#include "sdgsrrf/mapping.hpp"
#include "sdgsrrf/normalize.hpp"
#include "sdgsrrf/panel_io.hpp"
#include "sdgsrrf/table_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sdgsrrf;

namespace {

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open input file " + path.string());
    return in;
}

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot open output file " + path.string());
    return out;
}

json warnings_json(const std::vector<Warning>& warnings) {
    json arr = json::array();
    for (const Warning& w : warnings) arr.push_back({{"code", w.code}, {"message", w.message}});
    return arr;
}

void write_json_report(const fs::path& path, json body, const std::vector<Warning>& warnings) {
    body["warnings"] = warnings_json(warnings);
    auto out = open_output(path);
    out << body.dump(2) << '\n';
}

void print_warnings(const std::vector<Warning>& warnings) {
    for (const Warning& w : warnings)
        std::cerr << "warning [" << w.code << "] " << w.message << '\n';
}

Panel load_panel(const fs::path& path) {
    auto in = open_input(path);
    try {
        return parse_panel(in);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

/// Applies the config's LOCF step and collects imputation warnings.
Panel apply_locf(const Panel& panel, const IndexConfig& config,
                 std::vector<Warning>* warnings) {
    if (!config.locf_target_year) return panel;
    Panel imputed = impute_locf(panel, *config.locf_target_year, config.locf_indicators);
    if (warnings) {
        for (const Observation& obs : imputed.observations()) {
            if (!obs.imputed()) continue;
            if (const Observation* before = panel.find(obs.indicator(), obs.geo(), obs.year());
                before && before->imputed())
                continue;  // was already imputed upstream
            warnings->push_back(Warning{
                "imputed", "(" + obs.indicator() + ", " + obs.geo() + ", " +
                               std::to_string(obs.year()) +
                               ") carried forward from the last available year"});
        }
    }
    return imputed;
}

std::vector<CompositeSeries> run_composite_pipeline(const Panel& raw,
                                                    const GoalpostSet& goalposts,
                                                    const IndicatorCatalog& defs,
                                                    const IndexConfig& config,
                                                    std::vector<Warning>& warnings,
                                                    NormalizedPanel* normalized_out = nullptr) {
    Panel panel = apply_locf(raw, config, &warnings);
    NormalizedPanel normalized = normalize_panel(panel, goalposts, defs, &warnings);
    IndexOptions options;
    options.indicators = config.indicators;
    options.weights = config.weight_vector();
    options.zero_floor = config.zero_floor;
    std::vector<std::string> geos = config.geos;
    if (geos.empty()) geos.assign(normalized.geos().begin(), normalized.geos().end());
    auto series = compute_index_series(normalized, geos, config.years, options, &warnings);
    if (normalized_out) *normalized_out = std::move(normalized);
    return series;
}

// ---------------------------------------------------------------------------
// subcommand: goalposts

struct GoalpostsArgs {
    std::string panel_file, stats_file, indicators_file, out_file, json_file;
    int year_min = 2000;
    std::vector<std::string> geos;
    bool include_imputed = false;
};

int run_goalposts(const GoalpostsArgs& args) {
    auto defs_in = open_input(args.indicators_file);
    IndicatorCatalog defs = read_indicator_defs(defs_in);

    std::vector<DistributionStats> stats;
    if (!args.stats_file.empty()) {
        auto in = open_input(args.stats_file);
        stats = read_distribution_stats(in);
    } else {
        Panel panel = load_panel(args.panel_file);
        std::vector<std::string> universe = args.geos;
        if (universe.empty())
            universe.assign(panel.geos().begin(), panel.geos().end());
        for (const auto& indicator : panel.indicators())
            stats.push_back(pool_distribution(panel, indicator, universe, args.year_min,
                                              args.include_imputed));
    }

    std::vector<Goalposts> entries;
    entries.reserve(stats.size());
    for (const DistributionStats& s : stats)
        entries.push_back(derive_goalposts(s, defs.at(s.indicator())));
    GoalpostSet goalposts(std::move(entries));

    auto out = open_output(args.out_file);
    write_goalposts(out, goalposts);
    if (!args.json_file.empty()) {
        json body;
        body["indicators"] = stats.size();
        write_json_report(args.json_file, std::move(body), {});
    }
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: normalize

struct NormalizeArgs {
    std::string panel_file, goalposts_file, indicators_file, config_file, out_file, json_file;
};

int run_normalize(const NormalizeArgs& args) {
    Panel panel = load_panel(args.panel_file);
    auto gp_in = open_input(args.goalposts_file);
    GoalpostSet goalposts = read_goalposts(gp_in);
    auto defs_in = open_input(args.indicators_file);
    IndicatorCatalog defs = read_indicator_defs(defs_in);

    std::vector<Warning> warnings;
    if (!args.config_file.empty()) {
        auto cfg_in = open_input(args.config_file);
        IndexConfig config = IndexConfig::load(cfg_in);
        defs = config.apply_overrides(defs);
        panel = apply_locf(panel, config, &warnings);
    }
    NormalizedPanel normalized = normalize_panel(panel, goalposts, defs, &warnings);

    auto out = open_output(args.out_file);
    write_normalized(out, normalized);
    print_warnings(warnings);
    if (!args.json_file.empty()) {
        json body;
        body["values"] = normalized.size();
        write_json_report(args.json_file, std::move(body), warnings);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: composite

struct CompositeArgs {
    std::string panel_file, goalposts_file, indicators_file, config_file, out_file;
    std::string json_file, plot_file;
    double zero_floor = -1.0;  // <0 means "not set on the command line"
};

int run_composite(const CompositeArgs& args) {
    Panel panel = load_panel(args.panel_file);
    auto gp_in = open_input(args.goalposts_file);
    GoalpostSet goalposts = read_goalposts(gp_in);
    auto defs_in = open_input(args.indicators_file);
    IndicatorCatalog defs = read_indicator_defs(defs_in);
    auto cfg_in = open_input(args.config_file);
    IndexConfig config = IndexConfig::load(cfg_in);
    defs = config.apply_overrides(defs);
    if (args.zero_floor >= 0.0) config.zero_floor = args.zero_floor;

    std::vector<Warning> warnings;
    auto series = run_composite_pipeline(panel, goalposts, defs, config, warnings);

    auto out = open_output(args.out_file);
    write_composite(out, series);
    if (!args.plot_file.empty()) {
        auto plot = open_output(args.plot_file);
        write_plot_data(plot, series);
    }
    print_warnings(warnings);
    if (!args.json_file.empty()) {
        json body;
        body["years"] = {{"from", config.years.first}, {"to", config.years.last}};
        json index = json::object();
        for (const CompositeSeries& s : series) {
            json entries = json::object();
            for (const auto& [year, value] : s.entries())
                entries[std::to_string(year)] = value;
            index[s.geo()] = std::move(entries);
        }
        body["index"] = std::move(index);
        write_json_report(args.json_file, std::move(body), warnings);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: decompose

struct DecomposeArgs {
    std::string normalized_file, config_file, out_file, json_file;
    std::string geo;         // temporal mode
    int from_year = 0, to_year = 0;
    std::string geo_a, geo_b;  // cross-country mode
    int year = 0;
};

int run_decompose(const DecomposeArgs& args) {
    const bool temporal = !args.geo.empty();
    const bool cross = !args.geo_a.empty() || !args.geo_b.empty();
    if (temporal == cross)
        throw CLI::ValidationError(
            "decompose", "use either --geo with --from/--to or --geo-a/--geo-b with --year");
    if (temporal && (args.from_year == 0 || args.to_year == 0))
        throw CLI::ValidationError("decompose", "temporal mode needs --from and --to");
    if (cross && (args.geo_a.empty() || args.geo_b.empty() || args.year == 0))
        throw CLI::ValidationError("decompose",
                                   "cross-country mode needs --geo-a, --geo-b and --year");

    auto in = open_input(args.normalized_file);
    NormalizedPanel normalized = read_normalized(in);
    auto cfg_in = open_input(args.config_file);
    IndexConfig config = IndexConfig::load(cfg_in);
    const auto weights = config.weight_vector();

    auto out = open_output(args.out_file);
    json body;
    if (temporal) {
        auto from = gather_scores(normalized, args.geo, args.from_year, config.indicators);
        auto to = gather_scores(normalized, args.geo, args.to_year, config.indicators);
        auto d = decompose_temporal(config.indicators, from, to, weights);
        csv::write_row(out, std::vector<std::string>{"indicator", "score_from", "score_to",
                                                     "log_contribution", "factor"});
        for (std::size_t i = 0; i < d.contributions.size(); ++i) {
            const Contribution& c = d.contributions[i];
            csv::write_row(out, std::vector<std::string>{
                                    c.indicator, csv::format_double(from[i]),
                                    csv::format_double(to[i]),
                                    csv::format_double(c.log_contribution),
                                    csv::format_double(c.factor)});
        }
        csv::write_row(out, std::vector<std::string>{"total", "", "",
                                                     csv::format_double(d.log_ratio),
                                                     csv::format_double(d.factor)});
        body = {{"mode", "temporal"}, {"geo", args.geo},   {"from", args.from_year},
                {"to", args.to_year}, {"factor", d.factor}, {"log_ratio", d.log_ratio}};
    } else {
        auto a = gather_scores(normalized, args.geo_a, args.year, config.indicators);
        auto b = gather_scores(normalized, args.geo_b, args.year, config.indicators);
        auto d = decompose_cross_country(config.indicators, a, b, weights);
        csv::write_row(out, std::vector<std::string>{"indicator", "score_a", "score_b",
                                                     "log_contribution", "factor"});
        for (std::size_t i = 0; i < d.contributions.size(); ++i) {
            const Contribution& c = d.contributions[i];
            csv::write_row(out, std::vector<std::string>{
                                    c.indicator, csv::format_double(a[i]),
                                    csv::format_double(b[i]),
                                    csv::format_double(c.log_contribution),
                                    csv::format_double(c.factor)});
        }
        csv::write_row(out, std::vector<std::string>{"total", "", "",
                                                     csv::format_double(d.log_ratio),
                                                     csv::format_double(d.ratio)});
        body = {{"mode", "cross_country"}, {"geo_a", args.geo_a}, {"geo_b", args.geo_b},
                {"year", args.year},       {"ratio", d.ratio},    {"log_ratio", d.log_ratio}};
    }
    if (!args.json_file.empty()) write_json_report(args.json_file, std::move(body), {});
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: gap

struct GapArgs {
    std::string index_file, out_file, json_file;
};

int run_gap(const GapArgs& args) {
    auto in = open_input(args.index_file);
    auto series = read_composite(in);
    auto rows = gap_metrics(series);
    auto out = open_output(args.out_file);
    write_gap_rows(out, rows);
    if (!args.json_file.empty()) {
        json body;
        body["years"] = rows.size();
        write_json_report(args.json_file, std::move(body), {});
    }
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: report

struct ReportArgs {
    std::string catalog_file, coverage_file, occurrence_file, out_dir;
    std::string group_by = "mission-component";
};

int run_report(const ReportArgs& args) {
    if (args.catalog_file.empty() && args.coverage_file.empty() &&
        args.occurrence_file.empty())
        throw CLI::ValidationError("report",
                                   "provide --catalog, --coverage-table or --occurrence-table");
    const GroupBy group_by = args.group_by == "administration" ? GroupBy::Administration
                                                               : GroupBy::MissionComponent;
    fs::create_directories(args.out_dir);
    std::vector<Warning> warnings;

    if (!args.coverage_file.empty()) {
        auto in = open_input(args.coverage_file);
        auto report = read_coverage_table(in);
        auto out = open_output(fs::path(args.out_dir) / "coverage.csv");
        write_coverage_report(out, report);
    }
    if (!args.occurrence_file.empty()) {
        auto in = open_input(args.occurrence_file);
        auto matrix = read_occurrence_table(in);
        auto out = open_output(fs::path(args.out_dir) / "occurrence.csv");
        write_occurrence_matrix(out, matrix);
    }
    if (!args.catalog_file.empty()) {
        auto in = open_input(args.catalog_file);
        MappingCatalog catalog = load_catalog(in);
        if (args.coverage_file.empty()) {
            auto out = open_output(fs::path(args.out_dir) / "coverage.csv");
            write_coverage_report(out, coverage_report(catalog, group_by));
        }
        if (args.occurrence_file.empty()) {
            auto out = open_output(fs::path(args.out_dir) / "occurrence.csv");
            write_occurrence_matrix(out, occurrence_matrix(catalog, group_by));
        }
        {
            auto out = open_output(fs::path(args.out_dir) / "goals_by_mission.csv");
            write_goals_by_mission(out, goals_by_mission(catalog));
        }
        {
            FinanceReport finance = allocate_finance_by_goal(catalog);
            warnings.insert(warnings.end(), finance.warnings.begin(), finance.warnings.end());
            auto out = open_output(fs::path(args.out_dir) / "finance_by_goal.csv");
            write_finance_report(out, finance);
        }
    }
    print_warnings(warnings);
    json body;
    body["out_dir"] = args.out_dir;
    write_json_report(fs::path(args.out_dir) / "report.json", std::move(body), warnings);
    return 0;
}

// ---------------------------------------------------------------------------
// subcommand: reproduce-paper

struct ReproduceArgs {
    std::string fixtures_dir = "data";
    std::string out_dir;
};

class CheckList {
public:
    void check(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "ok  " : "FAIL") << "  " << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << '\n';
        results_.push_back({name, ok, detail});
        all_ok_ = all_ok_ && ok;
    }

    bool all_ok() const { return all_ok_; }

    json to_json() const {
        json arr = json::array();
        for (const auto& r : results_)
            arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        return arr;
    }

private:
    struct Result {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Result> results_;
    bool all_ok_ = true;
};

std::string fmt(double v) { return csv::format_fixed(v, 3); }

int run_reproduce(const ReproduceArgs& args) {
    const fs::path fixtures(args.fixtures_dir);
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir);
    CheckList checks;
    std::vector<Warning> warnings;

    // inputs
    auto defs_in = open_input(fixtures / "indicators.csv");
    IndicatorCatalog defs = read_indicator_defs(defs_in);
    auto stats_in = open_input(fixtures / "reference_stats.csv");
    auto stats = read_distribution_stats(stats_in);
    auto ref_gp_in = open_input(fixtures / "reference_goalposts.csv");
    GoalpostSet reference_goalposts = read_goalposts(ref_gp_in);
    Panel panel = load_panel(fixtures / "panel.csv");
    auto cfg_in = open_input(fixtures / "index_config.json");
    IndexConfig config = IndexConfig::load(cfg_in);
    auto ref_norm_in = open_input(fixtures / "reference_normalized.csv");
    NormalizedPanel reference_normalized = read_normalized(ref_norm_in);
    auto ref_comp_in = open_input(fixtures / "reference_composite.csv");
    auto reference_composite = read_composite(ref_comp_in);

    // 1. goalpost derivation against the published bounds
    {
        std::vector<Goalposts> derived;
        double worst = 0.0;
        for (const DistributionStats& s : stats) {
            Goalposts gp = derive_goalposts(s, defs.at(s.indicator()));
            const Goalposts& ref = reference_goalposts.at(s.indicator());
            worst = std::max({worst, std::abs(gp.g1() - ref.g1()),
                              std::abs(gp.g2() - ref.g2())});
            derived.push_back(std::move(gp));
        }
        auto out = open_output(out_dir / "goalposts.csv");
        write_goalposts(out, GoalpostSet(derived));
        checks.check("goalposts match reference bounds", worst <= 0.2,
                     "max deviation " + fmt(worst) + " <= 0.2");
    }

    // 2. normalization reproduces the reference table at one decimal
    NormalizedPanel normalized;
    auto series = run_composite_pipeline(panel, reference_goalposts, defs, config, warnings,
                                         &normalized);
    {
        Panel imputed = apply_locf(panel, config, nullptr);
        auto out = open_output(out_dir / "panel_imputed.csv");
        write_panel(out, imputed);
        auto json_out = open_output(out_dir / "panel_imputed.json");
        write_panel_json(json_out, imputed);
        auto norm_out = open_output(out_dir / "normalized.csv");
        write_normalized(norm_out, normalized);

        std::size_t mismatches = 0;
        for (const NormalizedValue& ref : reference_normalized.values()) {
            const NormalizedValue* got = normalized.find(ref.indicator(), ref.geo(), ref.year());
            if (!got || std::abs(std::round(got->score() * 10.0) / 10.0 - ref.score()) > 1e-9)
                ++mismatches;
        }
        checks.check("normalized scores match reference table",
                     mismatches == 0 && reference_normalized.size() > 0,
                     std::to_string(reference_normalized.size() - mismatches) + "/" +
                         std::to_string(reference_normalized.size()) + " cells");
    }

    // 3. composite endpoints
    {
        auto out = open_output(out_dir / "composite.csv");
        write_composite(out, series);
        auto plot = open_output(out_dir / "composite_plot.csv");
        write_plot_data(plot, series);

        double worst = 0.0;
        for (const CompositeSeries& ref : reference_composite) {
            auto it = std::find_if(series.begin(), series.end(), [&](const CompositeSeries& s) {
                return s.geo() == ref.geo();
            });
            for (const auto& [year, value] : ref.entries()) {
                auto got = it == series.end() ? std::nullopt : it->value_at(year);
                worst = std::max(worst, got ? std::abs(*got - value) : 1e9);
            }
        }
        checks.check("composite index matches reference values", worst <= 0.15,
                     "max deviation " + fmt(worst) + " <= 0.15");
    }

    // 4. per-year gap between best and worst performer
    {
        auto rows = gap_metrics(series);
        auto ref_rows = gap_metrics(reference_composite);
        auto out = open_output(out_dir / "gap.csv");
        write_gap_rows(out, rows);
        bool ok = true;
        std::string detail;
        for (const GapRow& ref : ref_rows) {
            auto it = std::find_if(rows.begin(), rows.end(),
                                   [&](const GapRow& r) { return r.year == ref.year; });
            bool row_ok = it != rows.end() && std::abs(it->range - ref.range) <= 0.1 &&
                          it->max_geo == ref.max_geo && it->min_geo == ref.min_geo;
            ok = ok && row_ok;
            if (!detail.empty()) detail += ", ";
            detail += std::to_string(ref.year) + ": " + fmt(it == rows.end() ? -1 : it->range) +
                      " vs " + fmt(ref.range);
        }
        checks.check("index gap matches reference years", ok, detail);
    }

    // 5. growth factors and decompositions
    {
        const int y0 = config.years.first, y1 = config.years.last;
        bool ok = true;
        std::string detail;
        for (const std::string& geo : {std::string("IT"), std::string("ES")}) {
            auto from = gather_scores(normalized, geo, y0, config.indicators);
            auto to = gather_scores(normalized, geo, y1, config.indicators);
            auto d = decompose_temporal(config.indicators, from, to, config.weight_vector());
            auto csv_out = open_output(out_dir / ("decomposition_" + geo + ".csv"));
            csv::write_row(csv_out, std::vector<std::string>{"indicator", "log_contribution",
                                                             "factor"});
            for (const Contribution& c : d.contributions)
                csv::write_row(csv_out, std::vector<std::string>{
                                            c.indicator, csv::format_double(c.log_contribution),
                                            csv::format_double(c.factor)});
            auto ref_it = std::find_if(
                reference_composite.begin(), reference_composite.end(),
                [&](const CompositeSeries& s) { return s.geo() == geo; });
            const double ref_factor = *ref_it->value_at(y1) / *ref_it->value_at(y0);
            ok = ok && std::abs(d.factor - ref_factor) <= 0.01;
            if (!detail.empty()) detail += ", ";
            detail += geo + " " + fmt(d.factor) + " vs " + fmt(ref_factor);
        }
        checks.check("growth factors match reference ratios", ok, detail);
    }
    {
        auto scores_it = gather_scores(normalized, "IT", config.years.first, config.indicators);
        auto scores_de = gather_scores(normalized, "DE", config.years.first, config.indicators);
        auto d = decompose_cross_country(config.indicators, scores_it, scores_de,
                                         config.weight_vector());
        double product = 1.0;
        for (const Contribution& c : d.contributions) product *= c.factor;
        auto out = open_output(out_dir / "decomposition_IT_vs_DE.csv");
        csv::write_row(out, std::vector<std::string>{"indicator", "log_contribution", "factor"});
        for (const Contribution& c : d.contributions)
            csv::write_row(out, std::vector<std::string>{c.indicator,
                                                         csv::format_double(c.log_contribution),
                                                         csv::format_double(c.factor)});
        checks.check("cross-country decomposition identity", std::abs(product - d.ratio) <= 1e-9,
                     "product " + fmt(product) + " = ratio " + fmt(d.ratio));
    }

    // 6. mapping reports: the two groupings must agree on every total
    {
        auto cov_mc_in = open_input(fixtures / "mapping" / "coverage_mission_component.csv");
        auto cov_mc = read_coverage_table(cov_mc_in);
        auto cov_ad_in = open_input(fixtures / "mapping" / "coverage_administration.csv");
        auto cov_ad = read_coverage_table(cov_ad_in);
        auto occ_mc_in = open_input(fixtures / "mapping" / "occurrence_mission_component.csv");
        auto occ_mc = read_occurrence_table(occ_mc_in);
        auto occ_ad_in = open_input(fixtures / "mapping" / "occurrence_administration.csv");
        auto occ_ad = read_occurrence_table(occ_ad_in);
        auto catalog_in = open_input(fixtures / "mapping" / "catalog.json");
        MappingCatalog catalog = load_catalog(catalog_in);

        fs::create_directories(out_dir / "mapping");
        {
            auto o1 = open_output(out_dir / "mapping" / "coverage_mission_component.csv");
            write_coverage_report(o1, cov_mc);
            auto o2 = open_output(out_dir / "mapping" / "coverage_administration.csv");
            write_coverage_report(o2, cov_ad);
            auto o3 = open_output(out_dir / "mapping" / "occurrence_mission_component.csv");
            write_occurrence_matrix(o3, occ_mc);
            auto o4 = open_output(out_dir / "mapping" / "occurrence_administration.csv");
            write_occurrence_matrix(o4, occ_ad);
            auto o5 = open_output(out_dir / "mapping" / "goals_by_mission.csv");
            write_goals_by_mission(o5, goals_by_mission(catalog));
        }

        bool cov_ok = cov_mc.totals.measures() == cov_ad.totals.measures() &&
                      cov_mc.totals.with_ic() == cov_ad.totals.with_ic();
        checks.check("coverage totals agree across groupings", cov_ok,
                     std::to_string(cov_mc.totals.measures()) + " measures, " +
                         std::to_string(cov_mc.totals.with_ic()) + " with indicators (" +
                         csv::format_fixed(cov_mc.totals.share(), 0) + "%)");
        bool occ_ok = occ_mc.grand_total == occ_ad.grand_total &&
                      occ_mc.col_totals == occ_ad.col_totals;
        checks.check("occurrence totals agree across groupings", occ_ok,
                     "grand total " + std::to_string(occ_mc.grand_total));

        FinanceReport finance = allocate_finance_by_goal(catalog);
        warnings.insert(warnings.end(), finance.warnings.begin(), finance.warnings.end());
        auto fin_out = open_output(out_dir / "mapping" / "finance_by_goal.csv");
        write_finance_report(fin_out, finance);
        double rounded_share_sum = 0.0;
        for (const FinanceRow& row : finance.rows)
            rounded_share_sum += std::round(row.share_pct * 10.0) / 10.0;
        checks.check("finance shares sum to 100%",
                     std::abs(rounded_share_sum - 100.0) <= 0.3,
                     "rounded shares sum to " + fmt(rounded_share_sum));

        auto goals = goals_by_mission(catalog);
        bool goals_ok = goals.size() == 6;
        for (const auto& [mission, set] : goals) goals_ok = goals_ok && !set.empty();
        checks.check("every mission maps to at least one goal", goals_ok,
                     std::to_string(goals.size()) + " missions");
    }

    print_warnings(warnings);
    json body;
    body["checks"] = checks.to_json();
    body["fixtures"] = fixtures.string();
    write_json_report(out_dir / "summary.json", std::move(body), warnings);
    return checks.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SDGs-RRF composite index toolkit"};
    app.require_subcommand(1);

    GoalpostsArgs goalposts_args;
    auto* goalposts_cmd = app.add_subcommand(
        "goalposts", "Derive min-max goalposts from a panel or from pooled statistics");
    auto* panel_opt = goalposts_cmd->add_option("--panel", goalposts_args.panel_file,
                                                "Tidy panel CSV to pool");
    auto* stats_opt = goalposts_cmd->add_option("--stats", goalposts_args.stats_file,
                                                "Pre-computed statistics CSV");
    goalposts_cmd->add_option("--indicators", goalposts_args.indicators_file,
                              "Indicator definitions CSV")->required();
    goalposts_cmd->add_option("--out", goalposts_args.out_file, "Output goalposts CSV")
        ->required();
    goalposts_cmd->add_option("--year-min", goalposts_args.year_min,
                              "Earliest year to pool (default 2000)");
    goalposts_cmd->add_option("--geo", goalposts_args.geos,
                              "Geography universe for pooling (repeatable; default: all)");
    goalposts_cmd->add_flag("--include-imputed", goalposts_args.include_imputed,
                            "Pool imputed observations too");
    goalposts_cmd->add_option("--json", goalposts_args.json_file, "JSON summary path");
    panel_opt->excludes(stats_opt);

    NormalizeArgs normalize_args;
    auto* normalize_cmd =
        app.add_subcommand("normalize", "Rescale raw observations to [0,100] scores");
    normalize_cmd->add_option("--panel", normalize_args.panel_file, "Tidy panel CSV")
        ->required();
    normalize_cmd->add_option("--goalposts", normalize_args.goalposts_file, "Goalposts CSV")
        ->required();
    normalize_cmd->add_option("--indicators", normalize_args.indicators_file,
                              "Indicator definitions CSV")->required();
    normalize_cmd->add_option("--config", normalize_args.config_file,
                              "Index config (applies imputation and overrides)");
    normalize_cmd->add_option("--out", normalize_args.out_file, "Output normalized CSV")
        ->required();
    normalize_cmd->add_option("--json", normalize_args.json_file, "JSON summary path");

    CompositeArgs composite_args;
    auto* composite_cmd =
        app.add_subcommand("composite", "Aggregate normalized scores into the composite index");
    composite_cmd->add_option("--panel", composite_args.panel_file, "Tidy panel CSV")
        ->required();
    composite_cmd->add_option("--goalposts", composite_args.goalposts_file, "Goalposts CSV")
        ->required();
    composite_cmd->add_option("--indicators", composite_args.indicators_file,
                              "Indicator definitions CSV")->required();
    composite_cmd->add_option("--config", composite_args.config_file, "Index config JSON")
        ->required();
    composite_cmd->add_option("--out", composite_args.out_file, "Output geo,year,index CSV")
        ->required();
    composite_cmd->add_option("--json", composite_args.json_file, "JSON summary path");
    composite_cmd->add_option("--plot-data", composite_args.plot_file,
                              "Wide year-by-geo series table for charting");
    composite_cmd->add_option("--zero-floor", composite_args.zero_floor,
                              "Replace zero scores with this value before aggregating");

    DecomposeArgs decompose_args;
    auto* decompose_cmd = app.add_subcommand(
        "decompose", "Decompose index changes or cross-country ratios by indicator");
    decompose_cmd->add_option("--normalized", decompose_args.normalized_file,
                              "Normalized scores CSV")->required();
    decompose_cmd->add_option("--config", decompose_args.config_file, "Index config JSON")
        ->required();
    decompose_cmd->add_option("--geo", decompose_args.geo, "Geography (temporal mode)");
    decompose_cmd->add_option("--from", decompose_args.from_year, "Start year (temporal mode)");
    decompose_cmd->add_option("--to", decompose_args.to_year, "End year (temporal mode)");
    decompose_cmd->add_option("--geo-a", decompose_args.geo_a, "Numerator geography");
    decompose_cmd->add_option("--geo-b", decompose_args.geo_b, "Denominator geography");
    decompose_cmd->add_option("--year", decompose_args.year, "Year (cross-country mode)");
    decompose_cmd->add_option("--out", decompose_args.out_file, "Output CSV")->required();
    decompose_cmd->add_option("--json", decompose_args.json_file, "JSON summary path");

    GapArgs gap_args;
    auto* gap_cmd = app.add_subcommand("gap", "Per-year cross-country spread of the index");
    gap_cmd->add_option("--index", gap_args.index_file, "Composite geo,year,index CSV")
        ->required();
    gap_cmd->add_option("--out", gap_args.out_file, "Output gap CSV")->required();
    gap_cmd->add_option("--json", gap_args.json_file, "JSON summary path");

    ReportArgs report_args;
    auto* report_cmd =
        app.add_subcommand("report", "Reports over the measure/indicator/SDG mapping");
    report_cmd->add_option("--catalog", report_args.catalog_file, "Mapping catalog JSON");
    report_cmd->add_option("--coverage-table", report_args.coverage_file,
                           "Pre-aggregated coverage counts CSV");
    report_cmd->add_option("--occurrence-table", report_args.occurrence_file,
                           "Pre-aggregated occurrence counts CSV");
    report_cmd->add_option("--group-by", report_args.group_by,
                           "mission-component or administration")
        ->check(CLI::IsMember({"mission-component", "administration"}));
    report_cmd->add_option("--out", report_args.out_dir, "Output directory")->required();

    ReproduceArgs reproduce_args;
    auto* reproduce_cmd = app.add_subcommand(
        "reproduce-paper", "Rebuild the reference results from the bundled fixtures");
    reproduce_cmd->add_option("--fixtures", reproduce_args.fixtures_dir,
                              "Fixture directory (default: data)");
    reproduce_cmd->add_option("--out", reproduce_args.out_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
        if (goalposts_cmd->parsed()) {
            if (goalposts_args.panel_file.empty() && goalposts_args.stats_file.empty())
                throw CLI::ValidationError("goalposts", "provide --panel or --stats");
            return run_goalposts(goalposts_args);
        }
        if (normalize_cmd->parsed()) return run_normalize(normalize_args);
        if (composite_cmd->parsed()) return run_composite(composite_args);
        if (decompose_cmd->parsed()) return run_decompose(decompose_args);
        if (gap_cmd->parsed()) return run_gap(gap_args);
        if (report_cmd->parsed()) return run_report(report_args);
        if (reproduce_cmd->parsed()) return run_reproduce(reproduce_args);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "] " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
