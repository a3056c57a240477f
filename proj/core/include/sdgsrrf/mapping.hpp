#pragma once

#include "sdgsrrf/types.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

// Measure <-> common-indicator <-> SDG mapping: code parsing, the catalog of
// measure records, and the report operations over it. Reports can also be
// built from pre-aggregated group-level tables, which is the granularity the
// published counts come at.

namespace sdgsrrf {

enum class MeasureKind { Investment, Reform };

/// The canonical order C1..C14 (numeric, not lexicographic).
std::span<const std::string> common_indicator_codes();

/// Identifier of a plan measure: mission M1..M6, component, investment or
/// reform, measure number and up to two sub-measure levels. Accepts both the
/// compact form (M2C4I0401) and the dotted form (M5C2I1.03.00, trailing zero
/// groups dropped); renders canonically dotted with two-digit sub levels.
class MeasureCode {
public:
    MeasureCode(int mission, int component, MeasureKind kind, int measure,
                std::vector<int> sub_levels = {});

    static MeasureCode parse(std::string_view text);

    int mission() const noexcept { return mission_; }
    int component() const noexcept { return component_; }
    MeasureKind kind() const noexcept { return kind_; }
    int measure() const noexcept { return measure_; }
    std::optional<int> sub_measure() const noexcept {
        return sub_levels_.empty() ? std::nullopt : std::optional<int>(sub_levels_.front());
    }
    std::span<const int> sub_levels() const noexcept { return sub_levels_; }

    std::string str() const;                 // canonical rendering
    std::string mission_component() const;   // "M{m}C{c}"

    friend bool operator==(const MeasureCode&, const MeasureCode&) = default;
    friend std::strong_ordering operator<=>(const MeasureCode&, const MeasureCode&) = default;

private:
    int mission_;
    int component_;
    MeasureKind kind_;
    int measure_;
    std::vector<int> sub_levels_;
};

class MeasureRecord {
public:
    MeasureRecord(MeasureCode code, std::string administration,
                  std::optional<double> amount_meur,
                  std::vector<std::string> common_indicators,
                  std::vector<std::string> sdg_indicators,
                  std::optional<int> prevalent_goal);

    const MeasureCode& code() const noexcept { return code_; }
    const std::string& administration() const noexcept { return administration_; }
    std::optional<double> amount_meur() const noexcept { return amount_meur_; }
    std::span<const std::string> common_indicators() const noexcept {
        return common_indicators_;
    }
    std::span<const std::string> sdg_indicators() const noexcept { return sdg_indicators_; }
    std::optional<int> prevalent_goal() const noexcept { return prevalent_goal_; }

private:
    MeasureCode code_;
    std::string administration_;
    std::optional<double> amount_meur_;           // millions of euro
    std::vector<std::string> common_indicators_;  // subset of C1..C14, sorted unique
    std::vector<std::string> sdg_indicators_;     // ids into the catalog dictionary
    std::optional<int> prevalent_goal_;           // 1..17
};

struct ProxyEntry {
    std::string sdg_indicator;
    int goal = 0;
};

struct SdgIndicatorInfo {
    std::string description;
    int goal = 0;
};

class MappingCatalog {
public:
    MappingCatalog() = default;
    MappingCatalog(std::vector<MeasureRecord> records,
                   std::map<std::string, std::string> common_indicator_descriptions,
                   std::map<std::string, ProxyEntry> proxy_map,
                   std::map<std::string, SdgIndicatorInfo> sdg_indicators,
                   std::map<int, std::string> goal_names);

    std::span<const MeasureRecord> records() const noexcept { return records_; }
    const std::map<std::string, std::string>& common_indicator_descriptions() const noexcept {
        return common_indicator_descriptions_;
    }
    const std::map<std::string, ProxyEntry>& proxy_map() const noexcept { return proxy_map_; }
    const std::map<std::string, SdgIndicatorInfo>& sdg_indicators() const noexcept {
        return sdg_indicators_;
    }
    const std::map<int, std::string>& goal_names() const noexcept { return goal_names_; }

private:
    std::vector<MeasureRecord> records_;  // sorted by code
    std::map<std::string, std::string> common_indicator_descriptions_;
    std::map<std::string, ProxyEntry> proxy_map_;
    std::map<std::string, SdgIndicatorInfo> sdg_indicators_;
    std::map<int, std::string> goal_names_;
};

/// Loads the JSON catalog (comments allowed).
MappingCatalog load_catalog(std::istream& in);

enum class GroupBy { MissionComponent, Administration };

struct CoverageRow {
    std::string group;
    int investments = 0;
    int reforms = 0;
    int investments_with_ic = 0;
    int reforms_with_ic = 0;

    int measures() const noexcept { return investments + reforms; }
    int with_ic() const noexcept { return investments_with_ic + reforms_with_ic; }
    /// Share of measures with at least one common indicator, in percent.
    double share() const noexcept {
        return measures() == 0 ? 0.0 : 100.0 * with_ic() / measures();
    }
};

struct CoverageReport {
    std::vector<CoverageRow> rows;  // sorted by group
    CoverageRow totals;             // group = "total"
};

CoverageReport coverage_report(const MappingCatalog& catalog, GroupBy group_by);
/// Builds the report (totals row included) from pre-aggregated group counts.
CoverageReport coverage_report(std::vector<CoverageRow> rows);
/// group,investments,reforms,investments_with_ic,reforms_with_ic
CoverageReport read_coverage_table(std::istream& in);
void write_coverage_report(std::ostream& out, const CoverageReport& report);

struct OccurrenceMatrix {
    std::vector<std::string> groups;       // sorted
    std::vector<std::string> indicators;   // C1..C14
    std::vector<std::vector<int>> counts;  // groups x indicators
    std::vector<int> row_totals;
    std::vector<int> col_totals;
    int grand_total = 0;
};

OccurrenceMatrix occurrence_matrix(const MappingCatalog& catalog, GroupBy group_by);
OccurrenceMatrix occurrence_matrix(std::vector<std::string> groups,
                                   std::vector<std::vector<int>> counts);
/// group,C1,...,C14
OccurrenceMatrix read_occurrence_table(std::istream& in);
void write_occurrence_matrix(std::ostream& out, const OccurrenceMatrix& matrix);

/// Union of SDG goals touched per mission, via prevalent goals and the goals
/// of the records' SDG indicators.
std::map<int, std::set<int>> goals_by_mission(const MappingCatalog& catalog);
void write_goals_by_mission(std::ostream& out, const std::map<int, std::set<int>>& goals);

struct FinanceRow {
    int goal = 0;
    std::string name;
    double amount_meur = 0.0;
    double share_pct = 0.0;
};

struct FinanceReport {
    std::vector<FinanceRow> rows;  // all 17 goals, ascending
    double total_meur = 0.0;
    std::vector<Warning> warnings;  // missing amounts, unattributed amounts
};

/// Sums record amounts by prevalent goal. Records with a goal but no amount
/// are reported as missing_amount warnings (non-fatal).
FinanceReport allocate_finance_by_goal(const MappingCatalog& catalog);
void write_finance_report(std::ostream& out, const FinanceReport& report);

}  // namespace sdgsrrf
