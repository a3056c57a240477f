#include "sdgsrrf/table_io.hpp"

#include "sdgsrrf/csv.hpp"
#include "sdgsrrf/errors.hpp"

#include <algorithm>
#include <map>
#include <ostream>

namespace sdgsrrf {

namespace {

struct Header {
    std::vector<std::string> names;
    std::size_t line = 0;

    std::size_t require(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        throw MalformedRow(line, "missing required column '" + name + "'");
    }

    std::ptrdiff_t optional(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<std::ptrdiff_t>(i);
        return -1;
    }
};

Header read_header(csv::Reader& reader) {
    auto row = reader.next();
    if (!row) throw MalformedRow(1, "empty input, header row required");
    return Header{std::move(row->fields), row->line};
}

void check_width(const csv::Row& row, std::size_t expected) {
    if (row.fields.size() != expected)
        throw MalformedRow(row.line, "expected " + std::to_string(expected) +
                                         " fields, got " + std::to_string(row.fields.size()));
}

bool parse_flag(std::string_view field, std::size_t line) {
    if (field == "true" || field == "1") return true;
    if (field == "false" || field == "0" || field.empty()) return false;
    throw MalformedRow(line, "not a boolean: '" + std::string(field) + "'");
}

}  // namespace

IndicatorCatalog read_indicator_defs(std::istream& in) {
    csv::Reader reader(in);
    const Header header = read_header(reader);
    const auto code = header.require("code");
    const auto description = header.require("description");
    const auto unit = header.require("unit");
    const auto polarity = header.require("polarity");
    const auto floor = header.optional("natural_floor");
    const auto ceiling = header.optional("natural_ceiling");

    std::vector<IndicatorDef> defs;
    while (auto row = reader.next()) {
        check_width(*row, header.names.size());
        std::optional<double> nf, nc;
        if (floor >= 0 && !csv::is_missing(row->fields[floor]))
            nf = csv::parse_double(row->fields[floor], row->line);
        if (ceiling >= 0 && !csv::is_missing(row->fields[ceiling]))
            nc = csv::parse_double(row->fields[ceiling], row->line);
        defs.emplace_back(row->fields[code], row->fields[description], row->fields[unit],
                          polarity_from_string(row->fields[polarity]), nf, nc);
    }
    return IndicatorCatalog(std::move(defs));
}

void write_indicator_defs(std::ostream& out, const IndicatorCatalog& catalog) {
    csv::write_row(out, std::vector<std::string>{"code", "description", "unit", "polarity",
                                                 "natural_floor", "natural_ceiling"});
    for (const IndicatorDef& def : catalog.defs()) {
        csv::write_row(
            out, std::vector<std::string>{
                     def.code(), def.description(), def.unit(),
                     std::string(to_string(def.polarity())),
                     def.natural_floor() ? csv::format_double(*def.natural_floor()) : "",
                     def.natural_ceiling() ? csv::format_double(*def.natural_ceiling()) : ""});
    }
}

std::vector<DistributionStats> read_distribution_stats(std::istream& in) {
    csv::Reader reader(in);
    const Header header = read_header(reader);
    const auto indicator = header.require("indicator");
    const auto min = header.require("min");
    const auto q1 = header.require("q1");
    const auto median = header.require("median");
    const auto q3 = header.require("q3");
    const auto max = header.require("max");
    const auto n = header.require("n");

    std::vector<DistributionStats> stats;
    while (auto row = reader.next()) {
        check_width(*row, header.names.size());
        stats.emplace_back(row->fields[indicator],
                           csv::parse_double(row->fields[min], row->line),
                           csv::parse_double(row->fields[q1], row->line),
                           csv::parse_double(row->fields[median], row->line),
                           csv::parse_double(row->fields[q3], row->line),
                           csv::parse_double(row->fields[max], row->line),
                           static_cast<std::size_t>(csv::parse_int(row->fields[n], row->line)));
    }
    return stats;
}

void write_distribution_stats(std::ostream& out, std::span<const DistributionStats> stats) {
    csv::write_row(out, std::vector<std::string>{"indicator", "min", "q1", "median", "q3",
                                                 "max", "n"});
    for (const DistributionStats& s : stats) {
        csv::write_row(out, std::vector<std::string>{
                                s.indicator(), csv::format_double(s.min()),
                                csv::format_double(s.q1()), csv::format_double(s.median()),
                                csv::format_double(s.q3()), csv::format_double(s.max()),
                                std::to_string(s.n())});
    }
}

GoalpostSet read_goalposts(std::istream& in) {
    csv::Reader reader(in);
    const Header header = read_header(reader);
    const auto indicator = header.require("indicator");
    const auto g1 = header.require("g1");
    const auto g2 = header.require("g2");
    const auto o1 = header.optional("g1_origin");
    const auto o2 = header.optional("g2_origin");

    std::vector<Goalposts> entries;
    while (auto row = reader.next()) {
        check_width(*row, header.names.size());
        GoalpostOrigin g1_origin = GoalpostOrigin::ObservedExtremum;
        GoalpostOrigin g2_origin = GoalpostOrigin::ObservedExtremum;
        if (o1 >= 0) g1_origin = goalpost_origin_from_string(row->fields[o1]);
        if (o2 >= 0) g2_origin = goalpost_origin_from_string(row->fields[o2]);
        entries.emplace_back(row->fields[indicator],
                             csv::parse_double(row->fields[g1], row->line),
                             csv::parse_double(row->fields[g2], row->line), g1_origin,
                             g2_origin);
    }
    return GoalpostSet(std::move(entries));
}

void write_goalposts(std::ostream& out, const GoalpostSet& goalposts) {
    csv::write_row(out,
                   std::vector<std::string>{"indicator", "g1", "g2", "g1_origin", "g2_origin"});
    for (const Goalposts& gp : goalposts.entries()) {
        csv::write_row(out, std::vector<std::string>{
                                gp.indicator(), csv::format_double(gp.g1()),
                                csv::format_double(gp.g2()),
                                std::string(to_string(gp.g1_origin())),
                                std::string(to_string(gp.g2_origin()))});
    }
}

NormalizedPanel read_normalized(std::istream& in) {
    csv::Reader reader(in);
    const Header header = read_header(reader);
    const auto indicator = header.require("indicator");
    const auto geo = header.require("geo");
    const auto year = header.require("year");
    const auto score = header.require("score");
    const auto clamped = header.optional("clamped");
    const auto imputed = header.optional("imputed");

    std::vector<NormalizedValue> values;
    while (auto row = reader.next()) {
        check_width(*row, header.names.size());
        values.emplace_back(row->fields[indicator], row->fields[geo],
                            csv::parse_int(row->fields[year], row->line),
                            csv::parse_double(row->fields[score], row->line),
                            clamped >= 0 && parse_flag(row->fields[clamped], row->line),
                            imputed >= 0 && parse_flag(row->fields[imputed], row->line));
    }
    return NormalizedPanel(std::move(values));
}

void write_normalized(std::ostream& out, const NormalizedPanel& panel) {
    csv::write_row(out, std::vector<std::string>{"indicator", "geo", "year", "score",
                                                 "clamped", "imputed"});
    for (const NormalizedValue& v : panel.values()) {
        csv::write_row(out, std::vector<std::string>{
                                v.indicator(), v.geo(), std::to_string(v.year()),
                                csv::format_double(v.score()), v.clamped() ? "true" : "false",
                                v.imputed() ? "true" : "false"});
    }
}

std::vector<CompositeSeries> read_composite(std::istream& in) {
    csv::Reader reader(in);
    const Header header = read_header(reader);
    const auto geo = header.require("geo");
    const auto year = header.require("year");
    const auto index = header.require("index");

    std::map<std::string, std::vector<std::pair<int, double>>> by_geo;
    while (auto row = reader.next()) {
        check_width(*row, header.names.size());
        by_geo[row->fields[geo]].emplace_back(
            csv::parse_int(row->fields[year], row->line),
            csv::parse_double(row->fields[index], row->line));
    }
    std::vector<CompositeSeries> series;
    series.reserve(by_geo.size());
    for (auto& [g, entries] : by_geo)
        series.emplace_back(g, std::move(entries), std::vector<std::string>{"index"},
                            std::vector<double>{});
    return series;
}

void write_composite(std::ostream& out, std::span<const CompositeSeries> series) {
    csv::write_row(out, std::vector<std::string>{"geo", "year", "index"});
    std::vector<const CompositeSeries*> ordered;
    for (const auto& s : series) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) { return a->geo() < b->geo(); });
    for (const CompositeSeries* s : ordered)
        for (const auto& [year, value] : s->entries())
            csv::write_row(out, std::vector<std::string>{s->geo(), std::to_string(year),
                                                         csv::format_double(value)});
}

void write_plot_data(std::ostream& out, std::span<const CompositeSeries> series) {
    std::vector<const CompositeSeries*> ordered;
    for (const auto& s : series) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) { return a->geo() < b->geo(); });

    std::vector<int> years;
    for (const CompositeSeries* s : ordered)
        for (const auto& [year, value] : s->entries()) years.push_back(year);
    std::sort(years.begin(), years.end());
    years.erase(std::unique(years.begin(), years.end()), years.end());

    std::vector<std::string> header{"year"};
    for (const CompositeSeries* s : ordered) header.push_back(s->geo());
    csv::write_row(out, header);
    for (int year : years) {
        std::vector<std::string> row{std::to_string(year)};
        for (const CompositeSeries* s : ordered) {
            auto v = s->value_at(year);
            row.push_back(v ? csv::format_double(*v) : "");
        }
        csv::write_row(out, row);
    }
}

void write_gap_rows(std::ostream& out, std::span<const GapRow> rows) {
    csv::write_row(out, std::vector<std::string>{"year", "range", "max_geo", "min_geo",
                                                 "mean", "cv", "n_geos"});
    for (const GapRow& row : rows) {
        csv::write_row(out, std::vector<std::string>{
                                std::to_string(row.year), csv::format_double(row.range),
                                row.max_geo, row.min_geo, csv::format_double(row.mean),
                                csv::format_double(row.cv), std::to_string(row.n_geos)});
    }
}

}  // namespace sdgsrrf
