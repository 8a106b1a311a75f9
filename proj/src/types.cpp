#include "metapool/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace metapool {

std::string_view measure_tag(OutcomeMeasure m) {
    switch (m) {
    case OutcomeMeasure::ReproductionNumber: return "R";
    case OutcomeMeasure::GrowthRate: return "r";
    case OutcomeMeasure::DailyInfections: return "I";
    }
    return "?";
}

OutcomeMeasure parse_measure(std::string_view tag) {
    if (tag == "R") return OutcomeMeasure::ReproductionNumber;
    if (tag == "r") return OutcomeMeasure::GrowthRate;
    if (tag == "I") return OutcomeMeasure::DailyInfections;
    throw DomainError("unknown measure tag '" + std::string(tag) + "' (expected R, r or I)");
}

QuantileSet validate_quantiles(const std::array<double, 5>& raw, OutcomeMeasure measure,
                               std::string model_id, std::string region_id) {
    static constexpr const char* names[5] = {"q5", "q25", "q50", "q75", "q95"};
    for (int i = 0; i < 5; ++i) {
        if (!std::isfinite(raw[i])) {
            throw NonFiniteError(std::string("quantile ") + names[i] + " is not finite");
        }
    }
    for (int i = 0; i < 4; ++i) {
        if (raw[i] > raw[i + 1]) {
            std::ostringstream os;
            os << "quantiles out of order: " << names[i] << "=" << raw[i]
               << " > " << names[i + 1] << "=" << raw[i + 1];
            throw NonMonotoneError(os.str());
        }
    }
    if (is_nonnegative(measure) && raw[0] < 0.0) {
        std::ostringstream os;
        os << "q5=" << raw[0] << " negative for count measure "
           << measure_tag(measure);
        throw NegativeForCountMeasureError(os.str());
    }
    QuantileSet qs;
    qs.model_id = std::move(model_id);
    qs.region_id = std::move(region_id);
    qs.measure = measure;
    qs.q = raw;
    return qs;
}

namespace {

std::string full_key(OutcomeMeasure m, const std::string& region, const std::string& model) {
    std::string k(measure_tag(m));
    k += '\x1f';
    k += region;
    k += '\x1f';
    k += model;
    return k;
}

} // namespace

void Dataset::add(QuantileSet record) {
    std::string key = full_key(record.measure, record.region_id, record.model_id);
    auto [it, inserted] = index_.emplace(std::move(key), records_.size());
    if (!inserted) {
        throw DuplicateKeyError("duplicate record for (" + std::string(measure_tag(record.measure)) +
                                ", " + record.region_id + ", " + record.model_id + ")");
    }
    records_.push_back(std::move(record));
}

std::vector<QuantileSet> Dataset::group_for_pooling(OutcomeMeasure measure,
                                                    const std::string& region_id) const {
    std::vector<QuantileSet> out;
    for (const auto& r : records_) {
        if (r.measure == measure && r.region_id == region_id) out.push_back(r);
    }
    if (out.empty()) {
        throw EmptyGroupError("no records for (" + std::string(measure_tag(measure)) +
                              ", " + region_id + ")");
    }
    return out;
}

std::vector<std::pair<OutcomeMeasure, std::string>> Dataset::group_keys() const {
    auto rank = [](OutcomeMeasure m) {
        switch (m) {
        case OutcomeMeasure::ReproductionNumber: return 0;
        case OutcomeMeasure::GrowthRate: return 1;
        case OutcomeMeasure::DailyInfections: return 2;
        }
        return 3;
    };
    std::vector<std::pair<OutcomeMeasure, std::string>> keys;
    for (const auto& r : records_) {
        std::pair<OutcomeMeasure, std::string> k{r.measure, r.region_id};
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        if (rank(a.first) != rank(b.first)) return rank(a.first) < rank(b.first);
        return a.second < b.second;
    });
    return keys;
}

} // namespace metapool
