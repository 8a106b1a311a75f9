#include "metapool/reliability.hpp"

#include <cmath>
#include <limits>

#include "metapool/errors.hpp"

namespace metapool {

double death_proxy(const Eigen::ArrayXd& daily_deaths) {
    const Eigen::Index n = daily_deaths.size();
    if (n < 10) throw TooShortError("death_proxy: need at least 10 daily values");
    return daily_deaths.tail(10).mean();
}

double heterogeneity(const Eigen::ArrayXd& subarea_cases) {
    if (subarea_cases.size() < 2) {
        throw TooFewSubareasError("heterogeneity: need at least 2 sub-areas");
    }
    const double mean = subarea_cases.mean();
    if (mean == 0.0) return std::numeric_limits<double>::infinity();
    const double sd = std::sqrt((subarea_cases - mean).square().mean());
    return sd / mean;
}

namespace {

int band(double x, const std::array<double, 2>& thresholds) {
    if (x < thresholds[0]) return 0;
    if (x < thresholds[1]) return 1;
    return 2;
}

} // namespace

ReliabilityScore reliability_score(const RegionSignal& signal, const ReliabilityConfig& cfg) {
    ReliabilityScore s;
    s.death_proxy = death_proxy(signal.daily_deaths);
    s.heterogeneity = heterogeneity(signal.subarea_cases);
    s.death_band = band(s.death_proxy, cfg.death_thresholds);
    s.heterogeneity_band = band(s.heterogeneity, cfg.heterogeneity_thresholds);
    s.score = cfg.score_table[s.death_band][s.heterogeneity_band];
    return s;
}

} // namespace metapool
