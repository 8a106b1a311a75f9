#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metapool/errors.hpp"

namespace metapool {

/// Epidemic outcome measure an estimate refers to.
enum class OutcomeMeasure {
    ReproductionNumber, ///< R(t): mean secondary cases per primary case
    GrowthRate,         ///< r: daily exponential growth rate
    DailyInfections,    ///< I: new daily infections (count, nonnegative)
};

/// Daily infections are a count and cannot go below zero; R(t) and r are unbounded.
constexpr bool is_nonnegative(OutcomeMeasure m) {
    return m == OutcomeMeasure::DailyInfections;
}

/// Short tag used in CSV input and file names: "R", "r" or "I" (case-sensitive).
std::string_view measure_tag(OutcomeMeasure m);

/// Inverse of measure_tag. Throws DomainError on anything else.
OutcomeMeasure parse_measure(std::string_view tag);

/// One candidate model's five percentiles for one (measure, region).
/// Order: Q(5), Q(25), Q(50), Q(75), Q(95).
struct QuantileSet {
    std::string model_id;
    std::string region_id;
    OutcomeMeasure measure = OutcomeMeasure::ReproductionNumber;
    std::array<double, 5> q{};

    double q05() const { return q[0]; }
    double q25() const { return q[1]; }
    double q50() const { return q[2]; }
    double q75() const { return q[3]; }
    double q95() const { return q[4]; }
};

/// Validates five raw percentiles against the measure and returns a QuantileSet.
///
/// Requirements: all values finite, non-strictly increasing, and Q(5) >= 0 for
/// count measures. Coincident quantiles are accepted; a fully collapsed set is
/// handled downstream as a degenerate point mass, not rejected here.
///
/// Throws NonFiniteError, NonMonotoneError or NegativeForCountMeasureError.
QuantileSet validate_quantiles(const std::array<double, 5>& raw, OutcomeMeasure measure,
                               std::string model_id = {}, std::string region_id = {});

/// Distribution family used to turn percentiles into a (mean, se) summary.
enum class FitPath { Normal, Gamma };

/// Derived per-model summary: point estimate and standard error plus the
/// diagnostics of how they were obtained.
struct FittedSummary {
    std::string model_id;
    std::string region_id;
    OutcomeMeasure measure = OutcomeMeasure::ReproductionNumber;
    double y_hat = 0.0;     ///< point estimate (measure units)
    double se_hat = 0.0;    ///< standard error; 0 only for degenerate records
    double sk = 0.0;        ///< Bowley quartile skewness, in [-1, 1]
    double se_star = 0.0;   ///< conservative standard error from the outer percentiles
    FitPath path = FitPath::Normal;
    bool degenerate = false; ///< true when all five input quantiles coincide
};

/// Immutable container of QuantileSet records keyed by (measure, region, model).
class Dataset {
public:
    /// Adds a record. Throws DuplicateKeyError when the key is already present.
    void add(QuantileSet record);

    /// All records for (measure, region) in insertion order.
    /// Throws EmptyGroupError when no model reported for that key.
    std::vector<QuantileSet> group_for_pooling(OutcomeMeasure measure,
                                               const std::string& region_id) const;

    /// Distinct (measure, region) keys in deterministic order:
    /// measures as R, r, I; regions sorted lexicographically within a measure.
    std::vector<std::pair<OutcomeMeasure, std::string>> group_keys() const;

    const std::vector<QuantileSet>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

private:
    std::vector<QuantileSet> records_;
    std::map<std::string, std::size_t> index_; // full key -> position in records_
};

} // namespace metapool
