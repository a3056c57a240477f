#include "sdgsrrf/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace sdgsrrf {

std::string MissingCell::describe(const std::vector<CellKey>& gaps) {
    std::ostringstream out;
    out << gaps.size() << " missing score cell(s):";
    for (const auto& g : gaps)
        out << " (" << g.geo << ", " << g.year << ", " << g.indicator << ")";
    return out.str();
}

Polarity polarity_from_string(std::string_view text) {
    if (text == "positive" || text == "Positive" || text == "+") return Polarity::Positive;
    if (text == "negative" || text == "Negative" || text == "-") return Polarity::Negative;
    throw ValidationError("polarity", "expected positive or negative, got '" +
                                          std::string(text) + "'");
}

std::string_view to_string(Polarity polarity) {
    return polarity == Polarity::Positive ? "positive" : "negative";
}

GoalpostOrigin goalpost_origin_from_string(std::string_view text) {
    if (text == "observed_extremum") return GoalpostOrigin::ObservedExtremum;
    if (text == "tukey_fence") return GoalpostOrigin::TukeyFence;
    if (text == "natural_bound_clip") return GoalpostOrigin::NaturalBoundClip;
    throw ValidationError("origin", "unknown goalpost origin '" + std::string(text) + "'");
}

std::string_view to_string(GoalpostOrigin origin) {
    switch (origin) {
        case GoalpostOrigin::ObservedExtremum: return "observed_extremum";
        case GoalpostOrigin::TukeyFence: return "tukey_fence";
        case GoalpostOrigin::NaturalBoundClip: return "natural_bound_clip";
    }
    return "observed_extremum";
}

IndicatorDef::IndicatorDef(std::string code, std::string description, std::string unit,
                           Polarity polarity, std::optional<double> natural_floor,
                           std::optional<double> natural_ceiling)
    : code_(std::move(code)),
      description_(std::move(description)),
      unit_(std::move(unit)),
      polarity_(polarity),
      natural_floor_(natural_floor),
      natural_ceiling_(natural_ceiling) {
    if (code_.empty()) throw ValidationError("code", "indicator code must be non-empty");
    if (natural_floor_ && !std::isfinite(*natural_floor_))
        throw ValidationError("natural_floor", "must be finite");
    if (natural_ceiling_ && !std::isfinite(*natural_ceiling_))
        throw ValidationError("natural_ceiling", "must be finite");
    if (natural_floor_ && natural_ceiling_ && !(*natural_floor_ < *natural_ceiling_))
        throw ValidationError("natural_floor",
                              "natural_floor must be below natural_ceiling for " + code_);
}

IndicatorCatalog::IndicatorCatalog(std::vector<IndicatorDef> defs) : defs_(std::move(defs)) {
    std::sort(defs_.begin(), defs_.end(),
              [](const IndicatorDef& a, const IndicatorDef& b) { return a.code() < b.code(); });
    for (std::size_t i = 1; i < defs_.size(); ++i)
        if (defs_[i - 1].code() == defs_[i].code())
            throw ValidationError("code", "duplicate indicator code " + defs_[i].code());
}

const IndicatorDef* IndicatorCatalog::find(std::string_view code) const noexcept {
    auto it = std::lower_bound(
        defs_.begin(), defs_.end(), code,
        [](const IndicatorDef& d, std::string_view c) { return d.code() < c; });
    if (it == defs_.end() || it->code() != code) return nullptr;
    return &*it;
}

const IndicatorDef& IndicatorCatalog::at(std::string_view code) const {
    const IndicatorDef* def = find(code);
    if (!def) throw Error("unknown_indicator", "no definition for indicator " + std::string(code));
    return *def;
}

Observation::Observation(std::string indicator, std::string geo, int year, double value,
                         bool imputed)
    : indicator_(std::move(indicator)),
      geo_(std::move(geo)),
      year_(year),
      value_(value),
      imputed_(imputed) {
    if (indicator_.empty()) throw ValidationError("indicator", "must be non-empty");
    if (geo_.empty()) throw ValidationError("geo", "must be non-empty");
    if (!std::isfinite(value_))
        throw ValidationError("value", "must be finite for (" + indicator_ + ", " + geo_ +
                                           ", " + std::to_string(year_) + ")");
}

namespace {

template <typename T>
bool key_less(const T& a, const T& b) {
    return std::make_tuple(std::cref(a.indicator()), std::cref(a.geo()), a.year()) <
           std::make_tuple(std::cref(b.indicator()), std::cref(b.geo()), b.year());
}

template <typename T>
std::vector<std::string> distinct_sorted(const std::vector<T>& values, auto&& proj) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(proj(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <typename T>
const T* find_by_key(const std::vector<T>& values, std::string_view indicator,
                     std::string_view geo, int year) noexcept {
    auto key = std::make_tuple(indicator, geo, year);
    auto it = std::lower_bound(values.begin(), values.end(), key, [](const T& v, const auto& k) {
        return std::make_tuple(std::string_view(v.indicator()), std::string_view(v.geo()),
                               v.year()) < k;
    });
    if (it == values.end() || it->indicator() != indicator || it->geo() != geo ||
        it->year() != year)
        return nullptr;
    return &*it;
}

}  // namespace

Panel::Panel(std::vector<Observation> observations, std::vector<std::string> geos,
             YearRange years)
    : observations_(std::move(observations)), geos_(std::move(geos)), years_(years) {
    if (years_.first > years_.last)
        throw ValidationError("years", "year range start must not exceed end");
    std::sort(geos_.begin(), geos_.end());
    geos_.erase(std::unique(geos_.begin(), geos_.end()), geos_.end());
    std::sort(observations_.begin(), observations_.end(), key_less<Observation>);
    for (std::size_t i = 1; i < observations_.size(); ++i) {
        const auto& a = observations_[i - 1];
        const auto& b = observations_[i];
        if (a.indicator() == b.indicator() && a.geo() == b.geo() && a.year() == b.year())
            throw DuplicateKey(b.indicator(), b.geo(), b.year());
    }
    for (const auto& obs : observations_) {
        if (!std::binary_search(geos_.begin(), geos_.end(), obs.geo()))
            throw ValidationError("geo", "observation geo '" + obs.geo() +
                                             "' is outside the declared universe");
        if (!years_.contains(obs.year()))
            throw ValidationError("year", "observation year " + std::to_string(obs.year()) +
                                              " is outside the declared range");
    }
    indicators_ =
        distinct_sorted(observations_, [](const Observation& o) { return o.indicator(); });
}

Panel Panel::infer(std::vector<Observation> observations) {
    if (observations.empty()) return Panel();
    std::vector<std::string> geos;
    int lo = observations.front().year(), hi = lo;
    for (const auto& o : observations) {
        geos.push_back(o.geo());
        lo = std::min(lo, o.year());
        hi = std::max(hi, o.year());
    }
    return Panel(std::move(observations), std::move(geos), YearRange{lo, hi});
}

const Observation* Panel::find(std::string_view indicator, std::string_view geo,
                               int year) const noexcept {
    return find_by_key(observations_, indicator, geo, year);
}

DistributionStats::DistributionStats(std::string indicator, double min, double q1,
                                     double median, double q3, double max, std::size_t n)
    : indicator_(std::move(indicator)), min_(min), q1_(q1), median_(median), q3_(q3),
      max_(max), n_(n) {
    if (indicator_.empty()) throw ValidationError("indicator", "must be non-empty");
    for (double v : {min_, q1_, median_, q3_, max_})
        if (!std::isfinite(v)) throw ValidationError("stats", "must be finite");
    if (!(min_ <= q1_ && q1_ <= median_ && median_ <= q3_ && q3_ <= max_))
        throw ValidationError("stats", "expected min <= q1 <= median <= q3 <= max for " +
                                           indicator_);
    if (n_ < 1) throw ValidationError("n", "pooled count must be at least 1");
}

Goalposts::Goalposts(std::string indicator, double g1, double g2, GoalpostOrigin g1_origin,
                     GoalpostOrigin g2_origin)
    : indicator_(std::move(indicator)), g1_(g1), g2_(g2), g1_origin_(g1_origin),
      g2_origin_(g2_origin) {
    if (indicator_.empty()) throw ValidationError("indicator", "must be non-empty");
    if (!std::isfinite(g1_) || !std::isfinite(g2_))
        throw ValidationError("goalposts", "must be finite");
    if (!(g1_ < g2_)) throw DegenerateGoalposts(indicator_, g1_, g2_);
}

GoalpostSet::GoalpostSet(std::vector<Goalposts> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Goalposts& a, const Goalposts& b) {
        return a.indicator() < b.indicator();
    });
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1].indicator() == entries_[i].indicator())
            throw ValidationError("indicator",
                                  "duplicate goalposts for " + entries_[i].indicator());
}

const Goalposts* GoalpostSet::find(std::string_view indicator) const noexcept {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), indicator,
        [](const Goalposts& g, std::string_view c) { return g.indicator() < c; });
    if (it == entries_.end() || it->indicator() != indicator) return nullptr;
    return &*it;
}

const Goalposts& GoalpostSet::at(std::string_view indicator) const {
    const Goalposts* gp = find(indicator);
    if (!gp) throw MissingGoalposts(std::string(indicator));
    return *gp;
}

NormalizedValue::NormalizedValue(std::string indicator, std::string geo, int year,
                                 double score, bool clamped, bool imputed)
    : indicator_(std::move(indicator)), geo_(std::move(geo)), year_(year), score_(score),
      clamped_(clamped), imputed_(imputed) {
    if (indicator_.empty()) throw ValidationError("indicator", "must be non-empty");
    if (geo_.empty()) throw ValidationError("geo", "must be non-empty");
    if (!std::isfinite(score_) || score_ < 0.0 || score_ > 100.0)
        throw ValidationError("score", "must lie in [0, 100], got " + std::to_string(score_));
}

NormalizedPanel::NormalizedPanel(std::vector<NormalizedValue> values)
    : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), key_less<NormalizedValue>);
    for (std::size_t i = 1; i < values_.size(); ++i) {
        const auto& a = values_[i - 1];
        const auto& b = values_[i];
        if (a.indicator() == b.indicator() && a.geo() == b.geo() && a.year() == b.year())
            throw DuplicateKey(b.indicator(), b.geo(), b.year());
    }
    if (!values_.empty()) {
        int lo = values_.front().year(), hi = lo;
        for (const auto& v : values_) {
            lo = std::min(lo, v.year());
            hi = std::max(hi, v.year());
        }
        years_ = YearRange{lo, hi};
    }
    geos_ = distinct_sorted(values_, [](const NormalizedValue& v) { return v.geo(); });
    indicators_ =
        distinct_sorted(values_, [](const NormalizedValue& v) { return v.indicator(); });
}

const NormalizedValue* NormalizedPanel::find(std::string_view indicator, std::string_view geo,
                                             int year) const noexcept {
    return find_by_key(values_, indicator, geo, year);
}

CompositeSeries::CompositeSeries(std::string geo, std::vector<std::pair<int, double>> entries,
                                 std::vector<std::string> indicator_set,
                                 std::vector<double> weights)
    : geo_(std::move(geo)), entries_(std::move(entries)),
      indicator_set_(std::move(indicator_set)), weights_(std::move(weights)) {
    if (geo_.empty()) throw ValidationError("geo", "must be non-empty");
    if (indicator_set_.empty())
        throw ValidationError("indicator_set", "must contain at least one indicator");
    if (weights_.empty()) weights_.assign(indicator_set_.size(), 1.0);
    if (weights_.size() != indicator_set_.size())
        throw ValidationError("weights", "must match the indicator set size");
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0)
            throw ValidationError("weights", "must be non-negative and finite");
        sum += w;
    }
    if (!(sum > 0.0)) throw ValidationError("weights", "must have a positive sum");
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1].first == entries_[i].first)
            throw ValidationError("entries", "duplicate year " +
                                                 std::to_string(entries_[i].first));
    for (const auto& [year, value] : entries_)
        if (!std::isfinite(value) || value < 0.0 || value > 100.0)
            throw ValidationError("entries", "index value for " + std::to_string(year) +
                                                 " must lie in [0, 100]");
}

std::optional<double> CompositeSeries::value_at(int year) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), year,
                               [](const auto& e, int y) { return e.first < y; });
    if (it == entries_.end() || it->first != year) return std::nullopt;
    return it->second;
}

}  // namespace sdgsrrf
