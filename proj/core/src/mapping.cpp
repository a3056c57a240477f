#include "sdgsrrf/mapping.hpp"

#include "sdgsrrf/csv.hpp"
#include "sdgsrrf/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

namespace sdgsrrf {

namespace {

const std::vector<std::string> kIndicatorCodes = {"C1", "C2",  "C3",  "C4",  "C5",
                                                  "C6", "C7",  "C8",  "C9",  "C10",
                                                  "C11", "C12", "C13", "C14"};

bool is_common_indicator(const std::string& code) {
    return std::find(kIndicatorCodes.begin(), kIndicatorCodes.end(), code) !=
           kIndicatorCodes.end();
}

}  // namespace

std::span<const std::string> common_indicator_codes() { return kIndicatorCodes; }

MeasureCode::MeasureCode(int mission, int component, MeasureKind kind, int measure,
                         std::vector<int> sub_levels)
    : mission_(mission), component_(component), kind_(kind), measure_(measure),
      sub_levels_(std::move(sub_levels)) {
    if (mission_ < 1 || mission_ > 6)
        throw ValidationError("mission", "must lie in 1..6, got " + std::to_string(mission_));
    if (component_ < 1) throw ValidationError("component", "must be positive");
    if (measure_ < 1) throw ValidationError("measure", "must be positive");
    while (!sub_levels_.empty() && sub_levels_.back() == 0) sub_levels_.pop_back();
    if (sub_levels_.size() > 2)
        throw ValidationError("sub_measure", "at most two sub-measure levels are supported");
    for (int s : sub_levels_)
        if (s < 0) throw ValidationError("sub_measure", "must be non-negative");
}

MeasureCode MeasureCode::parse(std::string_view text) {
    const std::string original(text);
    std::size_t pos = 0;
    auto fail = [&](const std::string& reason) -> UnparseableCode {
        return UnparseableCode(original, pos, reason);
    };
    auto read_int = [&](std::size_t max_digits) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) &&
               pos - start < max_digits)
            ++pos;
        if (pos == start) throw fail("expected a digit");
        int value = 0;
        for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
        return value;
    };

    if (pos >= text.size() || text[pos] != 'M') throw fail("expected 'M'");
    ++pos;
    const int mission = read_int(2);
    if (pos >= text.size() || text[pos] != 'C') throw fail("expected 'C'");
    ++pos;
    const int component = read_int(2);
    if (pos >= text.size() || (text[pos] != 'I' && text[pos] != 'R'))
        throw fail("expected 'I' or 'R'");
    const MeasureKind kind = text[pos] == 'I' ? MeasureKind::Investment : MeasureKind::Reform;
    ++pos;

    // tail: either dotted groups or a compact digit run
    std::vector<std::string> groups{{}};
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (groups.back().empty()) throw fail("empty group before '.'");
            groups.emplace_back();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            groups.back() += c;
        } else {
            throw fail("unexpected character '" + std::string(1, c) + "'");
        }
    }
    if (groups.back().empty()) throw fail("expected a measure number");

    auto to_int = [&](const std::string& digits) {
        int value = 0;
        for (char c : digits) value = value * 10 + (c - '0');
        return value;
    };

    int measure = 0;
    std::vector<int> subs;
    if (groups.size() == 1) {
        // compact form: up to two digits are the measure, the next two the sub
        const std::string& run = groups[0];
        if (run.size() <= 2) {
            measure = to_int(run);
        } else if (run.size() <= 4) {
            measure = to_int(run.substr(0, run.size() - 2));
            subs.push_back(to_int(run.substr(run.size() - 2)));
        } else {
            throw fail("compact measure run longer than four digits");
        }
    } else {
        if (groups.size() > 3) throw fail("too many dotted groups");
        measure = to_int(groups[0]);
        for (std::size_t i = 1; i < groups.size(); ++i) subs.push_back(to_int(groups[i]));
    }
    try {
        return MeasureCode(mission, component, kind, measure, std::move(subs));
    } catch (const ValidationError& e) {
        throw UnparseableCode(original, pos, e.what());
    }
}

std::string MeasureCode::str() const {
    char buf[48];
    int n = std::snprintf(buf, sizeof(buf), "M%dC%d%c%d", mission_, component_,
                          kind_ == MeasureKind::Investment ? 'I' : 'R', measure_);
    std::string out(buf, static_cast<std::size_t>(n));
    for (int s : sub_levels_) {
        std::snprintf(buf, sizeof(buf), ".%02d", s);
        out += buf;
    }
    return out;
}

std::string MeasureCode::mission_component() const {
    return "M" + std::to_string(mission_) + "C" + std::to_string(component_);
}

MeasureRecord::MeasureRecord(MeasureCode code, std::string administration,
                             std::optional<double> amount_meur,
                             std::vector<std::string> common_indicators,
                             std::vector<std::string> sdg_indicators,
                             std::optional<int> prevalent_goal)
    : code_(std::move(code)), administration_(std::move(administration)),
      amount_meur_(amount_meur), common_indicators_(std::move(common_indicators)),
      sdg_indicators_(std::move(sdg_indicators)), prevalent_goal_(prevalent_goal) {
    if (amount_meur_ && !(*amount_meur_ >= 0.0))
        throw ValidationError("amount", "must be non-negative for " + code_.str());
    if (prevalent_goal_ && (*prevalent_goal_ < 1 || *prevalent_goal_ > 17))
        throw ValidationError("prevalent_goal", "must lie in 1..17 for " + code_.str());
    std::sort(common_indicators_.begin(), common_indicators_.end());
    common_indicators_.erase(
        std::unique(common_indicators_.begin(), common_indicators_.end()),
        common_indicators_.end());
    for (const std::string& c : common_indicators_)
        if (!is_common_indicator(c))
            throw ValidationError("common_indicators",
                                  "'" + c + "' is not one of C1..C14 (" + code_.str() + ")");
    std::sort(sdg_indicators_.begin(), sdg_indicators_.end());
    sdg_indicators_.erase(std::unique(sdg_indicators_.begin(), sdg_indicators_.end()),
                          sdg_indicators_.end());
}

MappingCatalog::MappingCatalog(std::vector<MeasureRecord> records,
                               std::map<std::string, std::string> common_indicator_descriptions,
                               std::map<std::string, ProxyEntry> proxy_map,
                               std::map<std::string, SdgIndicatorInfo> sdg_indicators,
                               std::map<int, std::string> goal_names)
    : records_(std::move(records)),
      common_indicator_descriptions_(std::move(common_indicator_descriptions)),
      proxy_map_(std::move(proxy_map)), sdg_indicators_(std::move(sdg_indicators)),
      goal_names_(std::move(goal_names)) {
    std::sort(records_.begin(), records_.end(),
              [](const MeasureRecord& a, const MeasureRecord& b) { return a.code() < b.code(); });
    for (std::size_t i = 1; i < records_.size(); ++i)
        if (records_[i - 1].code() == records_[i].code())
            throw ValidationError("code", "duplicate measure code " + records_[i].code().str());
    for (const auto& [code, entry] : proxy_map_) {
        if (!is_common_indicator(code))
            throw ValidationError("proxy_map", "'" + code + "' is not one of C1..C14");
        if (entry.goal < 1 || entry.goal > 17)
            throw ValidationError("proxy_map", "goal for " + code + " must lie in 1..17");
    }
    for (const auto& [id, info] : sdg_indicators_)
        if (info.goal < 1 || info.goal > 17)
            throw ValidationError("sdg_indicators", "goal for " + id + " must lie in 1..17");
    for (const MeasureRecord& r : records_)
        for (const std::string& id : r.sdg_indicators())
            if (!sdg_indicators_.count(id))
                throw ValidationError("sdg_indicators", "record " + r.code().str() +
                                                            " references unknown id '" + id +
                                                            "'");
}

MappingCatalog load_catalog(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad_catalog", std::string("cannot parse catalog JSON: ") + e.what());
    }
    try {
        const nlohmann::json empty_object = nlohmann::json::object();
        const nlohmann::json empty_array = nlohmann::json::array();
        const nlohmann::json& commons_doc =
            doc.contains("common_indicators") ? doc.at("common_indicators") : empty_object;
        const nlohmann::json& proxies_doc =
            doc.contains("proxy_map") ? doc.at("proxy_map") : empty_object;
        const nlohmann::json& sdg_doc =
            doc.contains("sdg_indicators") ? doc.at("sdg_indicators") : empty_object;
        const nlohmann::json& goal_names_doc =
            doc.contains("goal_names") ? doc.at("goal_names") : empty_object;
        const nlohmann::json& records_doc =
            doc.contains("records") ? doc.at("records") : empty_array;

        std::map<std::string, std::string> commons;
        for (const auto& [k, v] : commons_doc.items()) commons[k] = v.get<std::string>();
        std::map<std::string, ProxyEntry> proxies;
        for (const auto& [k, v] : proxies_doc.items())
            proxies[k] = ProxyEntry{v.at("sdg_indicator").get<std::string>(),
                                    v.at("goal").get<int>()};
        std::map<std::string, SdgIndicatorInfo> sdg;
        for (const auto& [k, v] : sdg_doc.items())
            sdg[k] = SdgIndicatorInfo{v.value("description", ""), v.at("goal").get<int>()};
        std::map<int, std::string> goal_names;
        for (const auto& [k, v] : goal_names_doc.items()) {
            int goal = 0;
            auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), goal);
            if (ec != std::errc() || ptr != k.data() + k.size())
                throw Error("bad_catalog", "goal_names key '" + k + "' is not a number");
            goal_names[goal] = v.get<std::string>();
        }

        std::vector<MeasureRecord> records;
        for (const auto& r : records_doc) {
            std::optional<double> amount;
            if (r.contains("amount_meur") && !r.at("amount_meur").is_null())
                amount = r.at("amount_meur").get<double>();
            std::optional<int> goal;
            if (r.contains("prevalent_goal") && !r.at("prevalent_goal").is_null())
                goal = r.at("prevalent_goal").get<int>();
            records.emplace_back(
                MeasureCode::parse(r.at("code").get<std::string>()),
                r.value("administration", ""), amount,
                r.value("common_indicators", std::vector<std::string>{}),
                r.value("sdg_indicators", std::vector<std::string>{}), goal);
        }
        return MappingCatalog(std::move(records), std::move(commons), std::move(proxies),
                              std::move(sdg), std::move(goal_names));
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad_catalog", std::string("catalog JSON has unexpected shape: ") + e.what());
    }
}

namespace {

std::string group_key(const MeasureRecord& record, GroupBy group_by) {
    return group_by == GroupBy::MissionComponent ? record.code().mission_component()
                                                 : record.administration();
}

}  // namespace

CoverageReport coverage_report(const MappingCatalog& catalog, GroupBy group_by) {
    std::map<std::string, CoverageRow> by_group;
    for (const MeasureRecord& r : catalog.records()) {
        CoverageRow& row = by_group[group_key(r, group_by)];
        const bool has_ic = !r.common_indicators().empty();
        if (r.code().kind() == MeasureKind::Investment) {
            ++row.investments;
            if (has_ic) ++row.investments_with_ic;
        } else {
            ++row.reforms;
            if (has_ic) ++row.reforms_with_ic;
        }
    }
    std::vector<CoverageRow> rows;
    rows.reserve(by_group.size());
    for (auto& [group, row] : by_group) {
        row.group = group;
        rows.push_back(std::move(row));
    }
    return coverage_report(std::move(rows));
}

CoverageReport coverage_report(std::vector<CoverageRow> rows) {
    std::sort(rows.begin(), rows.end(),
              [](const CoverageRow& a, const CoverageRow& b) { return a.group < b.group; });
    CoverageReport report;
    report.totals.group = "total";
    for (const CoverageRow& row : rows) {
        if (row.investments < 0 || row.reforms < 0 || row.investments_with_ic < 0 ||
            row.reforms_with_ic < 0 || row.investments_with_ic > row.investments ||
            row.reforms_with_ic > row.reforms)
            throw ValidationError("coverage",
                                  "group " + row.group +
                                      ": counts with indicators cannot exceed measure counts");
    }
    for (const CoverageRow& row : rows) {
        report.totals.investments += row.investments;
        report.totals.reforms += row.reforms;
        report.totals.investments_with_ic += row.investments_with_ic;
        report.totals.reforms_with_ic += row.reforms_with_ic;
    }
    report.rows = std::move(rows);
    return report;
}

CoverageReport read_coverage_table(std::istream& in) {
    csv::Reader reader(in);
    auto header = reader.next();
    if (!header) throw MalformedRow(1, "empty input, header row required");
    const std::vector<std::string> expected{"group", "investments", "reforms",
                                            "investments_with_ic", "reforms_with_ic"};
    for (const std::string& name : expected)
        if (std::find(header->fields.begin(), header->fields.end(), name) ==
            header->fields.end())
            throw MalformedRow(header->line, "missing required column '" + name + "'");
    auto index_of = [&](const std::string& name) {
        return static_cast<std::size_t>(
            std::find(header->fields.begin(), header->fields.end(), name) -
            header->fields.begin());
    };
    const auto cg = index_of("group"), ci = index_of("investments"), cr = index_of("reforms"),
               cii = index_of("investments_with_ic"), cri = index_of("reforms_with_ic");
    std::vector<CoverageRow> rows;
    while (auto row = reader.next()) {
        if (row->fields.size() != header->fields.size())
            throw MalformedRow(row->line, "wrong field count");
        CoverageRow r;
        r.group = row->fields[cg];
        r.investments = csv::parse_int(row->fields[ci], row->line);
        r.reforms = csv::parse_int(row->fields[cr], row->line);
        r.investments_with_ic = csv::parse_int(row->fields[cii], row->line);
        r.reforms_with_ic = csv::parse_int(row->fields[cri], row->line);
        rows.push_back(std::move(r));
    }
    return coverage_report(std::move(rows));
}

void write_coverage_report(std::ostream& out, const CoverageReport& report) {
    csv::write_row(out, std::vector<std::string>{"group", "investments", "reforms",
                                                 "investments_with_ic", "reforms_with_ic",
                                                 "measures", "with_ic", "share_pct"});
    auto emit = [&](const CoverageRow& row) {
        csv::write_row(out, std::vector<std::string>{
                                row.group, std::to_string(row.investments),
                                std::to_string(row.reforms),
                                std::to_string(row.investments_with_ic),
                                std::to_string(row.reforms_with_ic),
                                std::to_string(row.measures()), std::to_string(row.with_ic()),
                                csv::format_fixed(row.share(), 1)});
    };
    for (const CoverageRow& row : report.rows) emit(row);
    emit(report.totals);
}

OccurrenceMatrix occurrence_matrix(const MappingCatalog& catalog, GroupBy group_by) {
    std::map<std::string, std::vector<int>> by_group;
    for (const MeasureRecord& r : catalog.records()) {
        auto& counts = by_group
                           .try_emplace(group_key(r, group_by),
                                        std::vector<int>(kIndicatorCodes.size(), 0))
                           .first->second;
        for (const std::string& indicator : r.common_indicators()) {
            auto it = std::find(kIndicatorCodes.begin(), kIndicatorCodes.end(), indicator);
            ++counts[static_cast<std::size_t>(it - kIndicatorCodes.begin())];
        }
    }
    std::vector<std::string> groups;
    std::vector<std::vector<int>> counts;
    for (auto& [group, row] : by_group) {
        groups.push_back(group);
        counts.push_back(std::move(row));
    }
    return occurrence_matrix(std::move(groups), std::move(counts));
}

OccurrenceMatrix occurrence_matrix(std::vector<std::string> groups,
                                   std::vector<std::vector<int>> counts) {
    if (groups.size() != counts.size())
        throw ValidationError("counts", "must have one row per group");
    OccurrenceMatrix m;
    m.indicators = kIndicatorCodes;
    // sort rows by group name
    std::vector<std::size_t> order(groups.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return groups[a] < groups[b]; });
    m.col_totals.assign(kIndicatorCodes.size(), 0);
    for (std::size_t i : order) {
        if (counts[i].size() != kIndicatorCodes.size())
            throw ValidationError("counts", "row for " + groups[i] + " must have 14 columns");
        int row_total = 0;
        for (std::size_t j = 0; j < counts[i].size(); ++j) {
            if (counts[i][j] < 0) throw ValidationError("counts", "must be non-negative");
            row_total += counts[i][j];
            m.col_totals[j] += counts[i][j];
        }
        m.groups.push_back(groups[i]);
        m.counts.push_back(counts[i]);
        m.row_totals.push_back(row_total);
        m.grand_total += row_total;
    }
    return m;
}

OccurrenceMatrix read_occurrence_table(std::istream& in) {
    csv::Reader reader(in);
    auto header = reader.next();
    if (!header) throw MalformedRow(1, "empty input, header row required");
    if (header->fields.size() != kIndicatorCodes.size() + 1 || header->fields[0] != "group")
        throw MalformedRow(header->line, "expected header group,C1,...,C14");
    for (std::size_t j = 0; j < kIndicatorCodes.size(); ++j)
        if (header->fields[j + 1] != kIndicatorCodes[j])
            throw MalformedRow(header->line, "expected column " + kIndicatorCodes[j]);
    std::vector<std::string> groups;
    std::vector<std::vector<int>> counts;
    while (auto row = reader.next()) {
        if (row->fields.size() != header->fields.size())
            throw MalformedRow(row->line, "wrong field count");
        groups.push_back(row->fields[0]);
        std::vector<int> line(kIndicatorCodes.size());
        for (std::size_t j = 0; j < line.size(); ++j)
            line[j] = row->fields[j + 1].empty() ? 0
                                                 : csv::parse_int(row->fields[j + 1], row->line);
        counts.push_back(std::move(line));
    }
    return occurrence_matrix(std::move(groups), std::move(counts));
}

void write_occurrence_matrix(std::ostream& out, const OccurrenceMatrix& matrix) {
    std::vector<std::string> header{"group"};
    header.insert(header.end(), matrix.indicators.begin(), matrix.indicators.end());
    header.push_back("total");
    csv::write_row(out, header);
    for (std::size_t i = 0; i < matrix.groups.size(); ++i) {
        std::vector<std::string> row{matrix.groups[i]};
        for (int c : matrix.counts[i]) row.push_back(std::to_string(c));
        row.push_back(std::to_string(matrix.row_totals[i]));
        csv::write_row(out, row);
    }
    std::vector<std::string> totals{"total"};
    for (int c : matrix.col_totals) totals.push_back(std::to_string(c));
    totals.push_back(std::to_string(matrix.grand_total));
    csv::write_row(out, totals);
}

std::map<int, std::set<int>> goals_by_mission(const MappingCatalog& catalog) {
    std::map<int, std::set<int>> out;
    for (const MeasureRecord& r : catalog.records()) {
        std::set<int>& goals = out[r.code().mission()];
        if (r.prevalent_goal()) goals.insert(*r.prevalent_goal());
        for (const std::string& id : r.sdg_indicators())
            goals.insert(catalog.sdg_indicators().at(id).goal);
    }
    // records with no goal information contribute nothing; drop empty unions
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

void write_goals_by_mission(std::ostream& out, const std::map<int, std::set<int>>& goals) {
    csv::write_row(out, std::vector<std::string>{"mission", "goals"});
    for (const auto& [mission, set] : goals) {
        std::string joined;
        for (int g : set) {
            if (!joined.empty()) joined += ';';
            joined += std::to_string(g);
        }
        csv::write_row(out, std::vector<std::string>{"M" + std::to_string(mission), joined});
    }
}

FinanceReport allocate_finance_by_goal(const MappingCatalog& catalog) {
    FinanceReport report;
    std::map<int, double> amounts;
    for (const MeasureRecord& r : catalog.records()) {
        if (r.prevalent_goal() && r.amount_meur()) {
            amounts[*r.prevalent_goal()] += *r.amount_meur();
            report.total_meur += *r.amount_meur();
        } else if (r.prevalent_goal()) {
            report.warnings.push_back(Warning{
                "missing_amount", "record " + r.code().str() + " has no amount; goal " +
                                      std::to_string(*r.prevalent_goal()) +
                                      " understates its total"});
        } else if (r.amount_meur() && *r.amount_meur() > 0.0) {
            report.warnings.push_back(Warning{
                "unattributed_amount", "record " + r.code().str() +
                                           " has an amount but no prevalent goal"});
        }
    }
    for (int goal = 1; goal <= 17; ++goal) {
        FinanceRow row;
        row.goal = goal;
        auto name = catalog.goal_names().find(goal);
        if (name != catalog.goal_names().end()) row.name = name->second;
        auto it = amounts.find(goal);
        if (it != amounts.end()) row.amount_meur = it->second;
        row.share_pct = report.total_meur > 0.0 ? 100.0 * row.amount_meur / report.total_meur
                                                : 0.0;
        report.rows.push_back(std::move(row));
    }
    return report;
}

void write_finance_report(std::ostream& out, const FinanceReport& report) {
    csv::write_row(out,
                   std::vector<std::string>{"goal", "name", "amount_meur", "share_pct", "note"});
    for (const FinanceRow& row : report.rows) {
        csv::write_row(out, std::vector<std::string>{
                                std::to_string(row.goal), row.name,
                                csv::format_double(row.amount_meur),
                                csv::format_fixed(row.share_pct, 1),
                                row.amount_meur == 0.0 ? "(-)" : ""});
    }
    csv::write_row(out, std::vector<std::string>{"total", "", csv::format_double(report.total_meur),
                                                 "100.0", ""});
}

}  // namespace sdgsrrf
