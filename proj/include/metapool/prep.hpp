#pragma once

#include "metapool/pso.hpp"
#include "metapool/types.hpp"

namespace metapool {

/// Settings for turning a QuantileSet into a (y_hat, se_hat) summary.
struct PrepConfig {
    double alpha = 0.10;          ///< CI level parameter of the conservative SE
    double skew_threshold = 0.5;  ///< |SK| above this routes to the gamma fit
    GammaFitConfig gamma_fit{};
};

/// Gamma distribution fitted to five percentiles, on the original scale.
/// The fitted variable is offset + G when reflected == false and
/// offset - G when reflected == true, with G ~ Gamma(shape, rate).
struct GammaFitResult {
    double shape = 0.0;
    double rate = 0.0;
    double offset = 0.0;
    bool reflected = false;
    double mean = 0.0; ///< offset +/- shape/rate depending on reflection
    double sd = 0.0;   ///< sqrt(shape)/rate
    double objective_value = 0.0;
};

/// Conservative standard error: the larger one-sided (Q50 to Q5/Q95) gap
/// divided by the normal quantile z(1 - alpha/2).
double conservative_se(const QuantileSet& q, double alpha);

/// Bowley quartile skewness (Q75 + Q25 - 2*Q50)/(Q75 - Q25), in [-1, 1].
/// Throws ZeroIqrError when Q75 == Q25.
double bowley_skewness(const QuantileSet& q);

/// Least-squares fit of a (reflected, shifted) gamma distribution to the five
/// percentiles. The swarm searches log(shape), log(rate) and the location
/// margin below the lowest percentile; the reported mean/sd are on the
/// original scale. Throws GammaFitError when the swarm neither stalls nor
/// reaches cfg.tolerance, and ZeroIqrError for a collapsed interquartile range.
GammaFitResult fit_gamma_to_quantiles(const QuantileSet& q, const GammaFitConfig& cfg);

/// Skew-gated summary: |SK| <= threshold takes the normal path
/// (y_hat = Q50, se_hat = conservative SE); above it, the gamma fit supplies
/// mean and sd. A collapsed IQR is treated as a point mass (no skew gate);
/// fully coincident quantiles yield se_hat = 0 and the degenerate flag.
FittedSummary fit_summary(const QuantileSet& q, const PrepConfig& cfg);

} // namespace metapool
