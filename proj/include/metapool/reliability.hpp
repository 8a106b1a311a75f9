#pragma once

#include <array>
#include <string>

#include <Eigen/Core>

namespace metapool {

/// Raw per-region signals behind the reliability score.
struct RegionSignal {
    std::string region_id;
    Eigen::ArrayXd daily_deaths;  ///< at least 10 consecutive daily values
    Eigen::ArrayXd subarea_cases; ///< case counts per sub-area, at least 2
};

/// Banding thresholds and the 3x3 score table. The numeric defaults are a
/// configurable stand-in: thresholds and the exact two-way combination are
/// deployment-specific and should be tuned to local data.
struct ReliabilityConfig {
    std::array<double, 2> death_thresholds{2.0, 10.0};       ///< 10-day mean deaths/day
    std::array<double, 2> heterogeneity_thresholds{0.5, 1.0}; ///< CV of sub-area cases
    // rows: death band (low, mid, high); cols: heterogeneity band (low, mid, high)
    std::array<std::array<int, 3>, 3> score_table{{{1, 1, 0}, {2, 2, 1}, {3, 2, 1}}};
};

/// 0-3 score plus the two banded components it came from.
struct ReliabilityScore {
    int score = 0;
    int death_band = 0;          ///< 0 low, 1 mid, 2 high
    int heterogeneity_band = 0;  ///< 0 low, 1 mid, 2 high
    double death_proxy = 0.0;
    double heterogeneity = 0.0;
};

/// Mean of the most recent 10 daily death counts.
/// Throws TooShortError for fewer than 10 entries.
double death_proxy(const Eigen::ArrayXd& daily_deaths);

/// Coefficient of variation (population sd / mean) of sub-area case counts.
/// All-zero input returns +infinity, the maximal-heterogeneity sentinel, since
/// estimates from a region with no observed cases cannot be trusted.
/// Throws TooFewSubareasError for fewer than 2 entries.
double heterogeneity(const Eigen::ArrayXd& subarea_cases);

/// Bands both signals and reads the score table. Higher deaths never lower the
/// score; higher heterogeneity never raise it (with the default table).
ReliabilityScore reliability_score(const RegionSignal& signal, const ReliabilityConfig& cfg);

} // namespace metapool
