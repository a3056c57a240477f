#include "sdgsrrf/config.hpp"

#include "sdgsrrf/errors.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>

namespace sdgsrrf {

IndexConfig IndexConfig::load(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad_config", std::string("cannot parse index config: ") + e.what());
    }
    try {
        IndexConfig cfg;
        cfg.indicators = doc.at("indicators").get<std::vector<std::string>>();
        if (cfg.indicators.empty())
            throw Error("bad_config", "index config needs a non-empty indicator set");
        if (doc.contains("weights"))
            for (const auto& [k, v] : doc.at("weights").items())
                cfg.weights[k] = v.get<double>();
        cfg.geos = doc.value("geos", std::vector<std::string>{});
        if (doc.contains("years")) {
            cfg.years.first = doc.at("years").at("from").get<int>();
            cfg.years.last = doc.at("years").at("to").get<int>();
            if (cfg.years.first > cfg.years.last)
                throw Error("bad_config", "years.from must not exceed years.to");
        }
        if (doc.contains("pool")) {
            cfg.pool_year_min = doc.at("pool").value("year_min", cfg.pool_year_min);
            cfg.pool_include_imputed =
                doc.at("pool").value("include_imputed", cfg.pool_include_imputed);
        }
        if (doc.contains("locf") && !doc.at("locf").is_null()) {
            cfg.locf_target_year = doc.at("locf").at("target_year").get<int>();
            cfg.locf_indicators =
                doc.at("locf").value("indicators", std::vector<std::string>{});
        }
        if (doc.contains("zero_floor") && !doc.at("zero_floor").is_null())
            cfg.zero_floor = doc.at("zero_floor").get<double>();
        if (doc.contains("overrides")) {
            for (const auto& [code, o] : doc.at("overrides").items()) {
                IndicatorOverride ov;
                if (o.contains("polarity") && !o.at("polarity").is_null())
                    ov.polarity = polarity_from_string(o.at("polarity").get<std::string>());
                if (o.contains("natural_floor") && !o.at("natural_floor").is_null())
                    ov.natural_floor = o.at("natural_floor").get<double>();
                if (o.contains("natural_ceiling") && !o.at("natural_ceiling").is_null())
                    ov.natural_ceiling = o.at("natural_ceiling").get<double>();
                cfg.overrides[code] = ov;
            }
        }
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad_config", std::string("index config has unexpected shape: ") + e.what());
    }
}

void IndexConfig::save(std::ostream& out) const {
    nlohmann::json doc;
    doc["indicators"] = indicators;
    if (!weights.empty()) doc["weights"] = weights;
    if (!geos.empty()) doc["geos"] = geos;
    doc["years"] = {{"from", years.first}, {"to", years.last}};
    doc["pool"] = {{"year_min", pool_year_min}, {"include_imputed", pool_include_imputed}};
    if (locf_target_year)
        doc["locf"] = {{"target_year", *locf_target_year}, {"indicators", locf_indicators}};
    if (zero_floor) doc["zero_floor"] = *zero_floor;
    if (!overrides.empty()) {
        nlohmann::json o = nlohmann::json::object();
        for (const auto& [code, ov] : overrides) {
            nlohmann::json entry = nlohmann::json::object();
            if (ov.polarity) entry["polarity"] = std::string(to_string(*ov.polarity));
            if (ov.natural_floor) entry["natural_floor"] = *ov.natural_floor;
            if (ov.natural_ceiling) entry["natural_ceiling"] = *ov.natural_ceiling;
            o[code] = entry;
        }
        doc["overrides"] = o;
    }
    out << doc.dump(2) << '\n';
}

std::vector<double> IndexConfig::weight_vector() const {
    std::vector<double> out;
    out.reserve(indicators.size());
    for (const std::string& code : indicators) {
        auto it = weights.find(code);
        out.push_back(it == weights.end() ? 1.0 : it->second);
    }
    return out;
}

IndicatorCatalog IndexConfig::apply_overrides(const IndicatorCatalog& catalog) const {
    if (overrides.empty()) return catalog;
    std::vector<IndicatorDef> defs;
    defs.reserve(catalog.size());
    for (const IndicatorDef& def : catalog.defs()) {
        auto it = overrides.find(def.code());
        if (it == overrides.end()) {
            defs.push_back(def);
            continue;
        }
        const IndicatorOverride& ov = it->second;
        defs.emplace_back(def.code(), def.description(), def.unit(),
                          ov.polarity.value_or(def.polarity()),
                          ov.natural_floor ? ov.natural_floor : def.natural_floor(),
                          ov.natural_ceiling ? ov.natural_ceiling : def.natural_ceiling());
    }
    return IndicatorCatalog(std::move(defs));
}

}  // namespace sdgsrrf
