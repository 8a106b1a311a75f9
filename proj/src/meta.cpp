#include "metapool/meta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "metapool/errors.hpp"
#include "metapool/special.hpp"

namespace metapool {

std::string_view weighting_name(Weighting w) {
    return w == Weighting::Equal ? "equal" : "inverse-variance";
}

std::string_view method_name(IntervalMethod m) {
    return m == IntervalMethod::Wald ? "wald" : "knha";
}

double reml_loglik(double tau2, const Eigen::ArrayXd& y, const Eigen::ArrayXd& v) {
    const Eigen::ArrayXd w = 1.0 / (v + tau2);
    const double sw = w.sum();
    const double theta = (w * y).sum() / sw;
    return -0.5 * (v + tau2).log().sum() - 0.5 * std::log(sw) -
           0.5 * (w * (y - theta).square()).sum();
}

Tau2Estimate reml_tau2(const Eigen::ArrayXd& y, const Eigen::ArrayXd& v) {
    const Eigen::Index k = y.size();
    if (k < 2 || v.size() != k) throw TooFewModelsError("reml_tau2: need at least 2 models");
    if ((v <= 0.0).any()) throw DomainError("reml_tau2: within variances must be positive");

    const double mean_y = y.mean();
    const double var_y = (y - mean_y).square().sum() / static_cast<double>(k - 1);
    const double B = 10.0 * std::max(var_y, v.maxCoeff());

    // Coarse scan: tau2 = 0 plus a log-spaced ladder up to B, keeping indexes
    // sorted so the best point can be bracketed by its neighbours.
    std::vector<double> grid;
    grid.push_back(0.0);
    constexpr int kScan = 241;
    const double lo_exp = std::log(B) - 27.6; // ~1e-12 relative floor
    for (int i = 0; i < kScan; ++i) {
        grid.push_back(std::exp(lo_exp + (std::log(B) - lo_exp) * i / (kScan - 1)));
    }
    std::size_t ibest = 0;
    double fbest = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double ll = reml_loglik(grid[i], y, v);
        if (ll > fbest) {
            fbest = ll;
            ibest = i;
        }
    }

    double a = ibest == 0 ? 0.0 : grid[ibest - 1];
    double b = ibest + 1 < grid.size() ? grid[ibest + 1] : B;

    // Golden-section refinement of the bracketed maximum.
    constexpr double invphi = 0.6180339887498949;
    const double tol = std::max(1e-12, 4.0 * std::numeric_limits<double>::epsilon() * B);
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = reml_loglik(x1, y, v);
    double f2 = reml_loglik(x2, y, v);
    while (b - a > tol) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = reml_loglik(x1, y, v);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = reml_loglik(x2, y, v);
        }
    }
    double tau2 = 0.5 * (a + b);
    if (reml_loglik(0.0, y, v) >= reml_loglik(tau2, y, v)) tau2 = 0.0;

    // Expected REML Fisher information.
    const Eigen::ArrayXd w = 1.0 / (v + tau2);
    const double sw = w.sum();
    const double sw2 = w.square().sum();
    const double sw3 = w.cube().sum();
    const double info = 0.5 * (sw2 - 2.0 * sw3 / sw + (sw2 / sw) * (sw2 / sw));

    Tau2Estimate est;
    est.tau2 = tau2;
    est.se = info > 0.0 ? std::sqrt(1.0 / info) : 0.0;
    return est;
}

PoolResult pool(const Eigen::ArrayXd& y, const Eigen::ArrayXd& v, const PoolConfig& cfg,
                double tau2, double se_tau2, bool nonnegative_measure) {
    const Eigen::Index k = y.size();
    if (k < 2 || v.size() != k) throw TooFewModelsError("pool: need at least 2 models");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw DomainError("pool: alpha must be in (0,1)");

    const Eigen::ArrayXd a = cfg.weighting == Weighting::Equal
                                 ? Eigen::ArrayXd::Constant(k, 1.0 / static_cast<double>(k))
                                 : (1.0 / (v + tau2)).eval();
    const double sa = a.sum();
    const double theta = (a * y).sum() / sa;
    const double var = (a.square() * (v + tau2)).sum() / (sa * sa);

    double quantile, ci_var;
    if (cfg.method == IntervalMethod::Wald) {
        quantile = normal_quantile(1.0 - cfg.alpha / 2.0);
        ci_var = var;
    } else {
        // Knapp-Hartung: scale by the residual statistic under
        // inverse-variance weights, t distribution with k-1 df.
        const Eigen::ArrayXd w = 1.0 / (v + tau2);
        const double qw = (w * (y - theta).square()).sum();
        double s2 = qw / static_cast<double>(k - 1);
        if (cfg.knha_truncate) s2 = std::max(1.0, s2);
        quantile = t_quantile(1.0 - cfg.alpha / 2.0, static_cast<double>(k - 1));
        ci_var = s2 * var;
    }

    PoolResult r;
    r.theta_hat = theta;
    r.se_theta = std::sqrt(ci_var);
    r.tau2 = tau2;
    r.se_tau2 = se_tau2;
    r.ci_low = theta - quantile * std::sqrt(ci_var);
    r.ci_high = theta + quantile * std::sqrt(ci_var);
    r.cr_low = theta - quantile * std::sqrt(ci_var + tau2);
    r.cr_high = theta + quantile * std::sqrt(ci_var + tau2);
    r.k = static_cast<int>(k);
    r.method = cfg.method;
    r.weighting = cfg.weighting;
    if (nonnegative_measure) {
        if (r.ci_low < 0.0) {
            r.ci_low = 0.0;
            r.clamped_low = true;
        }
        if (r.cr_low < 0.0) {
            r.cr_low = 0.0;
            r.clamped_low = true;
        }
    }
    return r;
}

RegionCombination combine_region(const std::vector<FittedSummary>& summaries,
                                 const PoolConfig& cfg) {
    const std::size_t k = summaries.size();
    std::size_t usable = 0;
    for (const auto& s : summaries) {
        if (!s.degenerate) ++usable;
    }
    if (k < 2 || usable < 2) {
        throw TooFewModelsError("combine_region: need at least 2 non-degenerate summaries");
    }

    Eigen::ArrayXd y(k), v(k);
    RegionCombination out;
    for (std::size_t i = 0; i < k; ++i) {
        y[static_cast<Eigen::Index>(i)] = summaries[i].y_hat;
        double se = summaries[i].se_hat;
        if (se <= 0.0) {
            se = 1e-6 * std::max(std::fabs(summaries[i].y_hat), 1.0);
            out.floored_models.push_back(summaries[i].model_id);
        }
        v[static_cast<Eigen::Index>(i)] = se * se;
        out.model_ids.push_back(summaries[i].model_id);
    }

    const Tau2Estimate tau = reml_tau2(y, v);
    const bool nonneg = is_nonnegative(summaries.front().measure);
    out.result = pool(y, v, cfg, tau.tau2, tau.se, nonneg);
    return out;
}

} // namespace metapool
