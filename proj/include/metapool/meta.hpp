#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "metapool/types.hpp"

namespace metapool {

/// Point-estimate weighting scheme: 1/k per model, or 1/(v_i + tau2).
enum class Weighting { Equal, InverseVariance };

/// Confidence interval construction for the combined estimate.
enum class IntervalMethod { Wald, KNHA };

std::string_view weighting_name(Weighting w);
std::string_view method_name(IntervalMethod m);

/// Restricted maximum likelihood estimate of the between-model variance.
struct Tau2Estimate {
    double tau2 = 0.0;
    double se = 0.0; ///< from the expected (REML) Fisher information
};

/// Combined estimate for one (measure, region) group.
struct PoolResult {
    double theta_hat = 0.0;
    double se_theta = 0.0; ///< sqrt of the variance behind the CI (scaled for KNHA)
    double tau2 = 0.0;
    double se_tau2 = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double cr_low = 0.0;  ///< prediction interval, tau2 treated as known
    double cr_high = 0.0;
    int k = 0;
    IntervalMethod method = IntervalMethod::Wald;
    Weighting weighting = Weighting::Equal;
    bool clamped_low = false; ///< a lower bound was raised to 0 for a count measure
};

struct PoolConfig {
    Weighting weighting = Weighting::Equal;
    IntervalMethod method = IntervalMethod::Wald;
    double alpha = 0.10;
    bool knha_truncate = false; ///< floor the KNHA scale factor at 1
};

/// Restricted log-likelihood of tau2 given effects y and within variances v,
/// up to an additive constant. Exposed for oracle-style checks.
double reml_loglik(double tau2, const Eigen::ArrayXd& y, const Eigen::ArrayXd& v);

/// Maximizes the restricted likelihood over tau2 in [0, inf): coarse scan of a
/// log-spaced bracket [0, B] with B = 10*max(var(y), max v), then golden-section
/// refinement and truncation at zero. Throws TooFewModelsError for k < 2.
Tau2Estimate reml_tau2(const Eigen::ArrayXd& y, const Eigen::ArrayXd& v);

/// Pools effects y with within variances v at the given tau2.
/// Wald: theta +/- z(1-alpha/2)*sqrt(Var), Var = sum a_i^2 (v_i+tau2) / (sum a_i)^2.
/// KNHA: variance scaled by Q_w/(k-1) with inverse-variance residual weights,
/// t(k-1) quantile. Prediction interval adds tau2 under the radical. Lower
/// bounds are clamped at 0 for count measures.
PoolResult pool(const Eigen::ArrayXd& y, const Eigen::ArrayXd& v, const PoolConfig& cfg,
                double tau2, double se_tau2, bool nonnegative_measure);

/// combine_region output: the pooled result plus provenance.
struct RegionCombination {
    PoolResult result;
    std::vector<std::string> model_ids;      ///< models included, input order
    std::vector<std::string> floored_models; ///< degenerate records whose variance was floored
};

/// Assembles (y, v) from fitted summaries, floors degenerate variances at
/// (1e-6 * max(|y_i|, 1))^2, estimates tau2 by REML and pools. Requires at
/// least two non-degenerate summaries.
RegionCombination combine_region(const std::vector<FittedSummary>& summaries,
                                 const PoolConfig& cfg);

} // namespace metapool
