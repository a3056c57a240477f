#include "sdgsrrf/panel_io.hpp"

#include "sdgsrrf/csv.hpp"
#include "sdgsrrf/errors.hpp"
#include "sdgsrrf/stats.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace sdgsrrf {

namespace {

std::size_t column_index(const csv::Row& header, const std::string& name) {
    for (std::size_t i = 0; i < header.fields.size(); ++i)
        if (header.fields[i] == name) return i;
    throw MalformedRow(header.line, "missing required column '" + name + "'");
}

bool parse_bool(std::string_view field, std::size_t line) {
    if (field == "true" || field == "1") return true;
    if (field == "false" || field == "0" || field.empty()) return false;
    throw MalformedRow(line, "not a boolean: '" + std::string(field) + "'");
}

}  // namespace

Panel parse_panel(std::istream& in, const PanelSchema& schema) {
    csv::Reader reader(in, schema.delimiter);
    auto header = reader.next();
    if (!header) throw MalformedRow(1, "empty input, header row required");

    const std::size_t ci = column_index(*header, schema.indicator);
    const std::size_t cg = column_index(*header, schema.geo);
    const std::size_t cy = column_index(*header, schema.year);
    const std::size_t cv = column_index(*header, schema.value);
    std::ptrdiff_t cm = -1;
    for (std::size_t i = 0; i < header->fields.size(); ++i)
        if (header->fields[i] == schema.imputed) cm = static_cast<std::ptrdiff_t>(i);

    std::vector<Observation> observations;
    while (auto row = reader.next()) {
        if (row->fields.size() != header->fields.size())
            throw MalformedRow(row->line,
                               "expected " + std::to_string(header->fields.size()) +
                                   " fields, got " + std::to_string(row->fields.size()));
        const std::string& value_field = row->fields[cv];
        if (csv::is_missing(value_field)) continue;  // missing, not zero
        double value = csv::parse_double(value_field, row->line);
        if (!std::isfinite(value))
            throw NonFiniteValue("line " + std::to_string(row->line));
        bool imputed = cm >= 0 && parse_bool(row->fields[static_cast<std::size_t>(cm)],
                                             row->line);
        if (row->fields[ci].empty() || row->fields[cg].empty())
            throw MalformedRow(row->line, "indicator and geo must be non-empty");
        observations.emplace_back(row->fields[ci], row->fields[cg],
                                  csv::parse_int(row->fields[cy], row->line), value, imputed);
    }
    return Panel::infer(std::move(observations));
}

void write_panel(std::ostream& out, const Panel& panel, const PanelSchema& schema) {
    csv::write_row(out, std::vector<std::string>{schema.indicator, schema.geo, schema.year,
                                                 schema.value, schema.imputed},
                   schema.delimiter);
    for (const Observation& obs : panel.observations()) {
        csv::write_row(out,
                       std::vector<std::string>{obs.indicator(), obs.geo(),
                                                std::to_string(obs.year()),
                                                csv::format_double(obs.value()),
                                                obs.imputed() ? "true" : "false"},
                       schema.delimiter);
    }
}

void write_panel_json(std::ostream& out, const Panel& panel) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Observation& obs : panel.observations()) {
        rows.push_back({{"indicator", obs.indicator()},
                        {"geo", obs.geo()},
                        {"year", obs.year()},
                        {"value", obs.value()},
                        {"imputed", obs.imputed()}});
    }
    out << rows.dump(2) << '\n';
}

Panel impute_locf(const Panel& panel, int target_year,
                  std::span<const std::string> indicators) {
    if (!panel.years().contains(target_year))
        throw Error("year_out_of_range", "target year " + std::to_string(target_year) +
                                             " is outside the declared panel range");

    std::vector<std::string> distinct(indicators.begin(), indicators.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<Observation> observations(panel.observations().begin(),
                                          panel.observations().end());
    for (const std::string& indicator : distinct) {
        for (const std::string& geo : panel.geos()) {
            if (panel.find(indicator, geo, target_year)) continue;
            for (int year = target_year - 1; year >= panel.years().first; --year) {
                if (const Observation* prev = panel.find(indicator, geo, year)) {
                    observations.emplace_back(indicator, geo, target_year, prev->value(),
                                              true);
                    break;
                }
            }
            // no earlier value: the cell stays missing
        }
    }
    return Panel(std::move(observations),
                 std::vector<std::string>(panel.geos().begin(), panel.geos().end()),
                 panel.years());
}

DistributionStats pool_distribution(const Panel& panel, const std::string& indicator,
                                    std::span<const std::string> geo_universe, int year_min,
                                    bool include_imputed) {
    std::vector<double> values;
    for (const Observation& obs : panel.observations()) {
        if (obs.indicator() != indicator) continue;
        if (obs.year() < year_min) continue;
        if (!include_imputed && obs.imputed()) continue;
        if (std::find(geo_universe.begin(), geo_universe.end(), obs.geo()) ==
            geo_universe.end())
            continue;
        values.push_back(obs.value());
    }
    if (values.empty()) throw EmptyPool(indicator);
    std::sort(values.begin(), values.end());
    const auto q = stats::quartiles(values);
    return DistributionStats(indicator, values.front(), q.q1, q.median, q.q3, values.back(),
                             values.size());
}

}  // namespace sdgsrrf
