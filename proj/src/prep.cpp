#include "metapool/prep.hpp"

#include <algorithm>
#include <cmath>

#include "metapool/errors.hpp"
#include "metapool/special.hpp"

namespace metapool {

double conservative_se(const QuantileSet& q, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("conservative_se: alpha must be in (0,1)");
    const double gap = std::max(std::fabs(q.q95() - q.q50()), std::fabs(q.q50() - q.q05()));
    return gap / normal_quantile(1.0 - alpha / 2.0);
}

double bowley_skewness(const QuantileSet& q) {
    const double iqr = q.q75() - q.q25();
    if (iqr <= 0.0) throw ZeroIqrError("bowley_skewness: Q75 == Q25");
    return (q.q75() + q.q25() - 2.0 * q.q50()) / iqr;
}

namespace {

constexpr double kLevels[5] = {0.05, 0.25, 0.50, 0.75, 0.95};
constexpr double kLogShapeLo = -6.907755278982137;  // log(1e-3)
constexpr double kLogShapeHi = 13.815510557964274;  // log(1e6)
constexpr double kLogRateLo = -13.815510557964274;  // log(1e-6)
constexpr double kLogRateHi = 20.72326583694641;    // log(1e9)
constexpr double kMarginHiFrac = 4.0;               // margin box: [~0, 4]*spread

} // namespace

GammaFitResult fit_gamma_to_quantiles(const QuantileSet& q, const GammaFitConfig& cfg) {
    if (q.q75() - q.q25() <= 0.0) {
        throw ZeroIqrError("fit_gamma_to_quantiles: collapsed interquartile range");
    }
    const bool reflected = bowley_skewness(q) < 0.0;

    // Transformed percentiles, increasing, positively skewed.
    std::array<double, 5> t{};
    for (int i = 0; i < 5; ++i) t[i] = reflected ? -q.q[4 - i] : q.q[i];
    const double spread = t[4] - t[0];

    // The gamma origin sits a margin m below t[0]; optimizing over m (rather
    // than pinning it) keeps the fit exact for data that really are gamma and
    // makes the search invariant under translation of the input quantiles.
    Eigen::VectorXd lower(3), upper(3);
    lower << kLogShapeLo, kLogRateLo, 1e-9 * spread;
    upper << kLogShapeHi, kLogRateHi, kMarginHiFrac * spread;

    auto objective = [&](const Eigen::VectorXd& z) {
        const double shape = std::exp(z[0]);
        const double rate = std::exp(z[1]);
        const double m = z[2];
        double ssq = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double u = t[i] - t[0] + m;
            const double d = gamma_quantile(kLevels[i], shape, rate) - u;
            ssq += d * d;
        }
        return ssq;
    };

    // Moment seeds from (median, conservative SE) at two candidate margins.
    const double se_star = std::max(t[4] - t[2], t[2] - t[0]) / normal_quantile(0.95);
    std::vector<Eigen::VectorXd> seeds;
    for (double frac : {0.1, 1.0}) {
        const double m = frac * spread;
        const double u50 = t[2] - t[0] + m;
        if (se_star > 0.0 && u50 > 0.0) {
            Eigen::VectorXd s(3);
            s << std::log((u50 / se_star) * (u50 / se_star)), std::log(u50 / (se_star * se_star)), m;
            seeds.push_back(s);
        }
    }

    const PsoResult r = pso_minimize(objective, lower, upper, cfg, seeds);
    if (!r.converged && r.value > cfg.tolerance) {
        throw GammaFitError("fit_gamma_to_quantiles: swarm did not converge (objective " +
                            std::to_string(r.value) + ")");
    }

    const double shape = std::exp(r.argmin[0]);
    const double rate = std::exp(r.argmin[1]);
    const double origin_t = t[0] - r.argmin[2]; // gamma origin on the transformed scale

    GammaFitResult out;
    out.shape = shape;
    out.rate = rate;
    out.reflected = reflected;
    out.offset = reflected ? -origin_t : origin_t;
    out.sd = std::sqrt(shape) / rate;
    out.mean = reflected ? out.offset - shape / rate : out.offset + shape / rate;
    out.objective_value = r.value;
    return out;
}

FittedSummary fit_summary(const QuantileSet& q, const PrepConfig& cfg) {
    FittedSummary s;
    s.model_id = q.model_id;
    s.region_id = q.region_id;
    s.measure = q.measure;
    s.se_star = conservative_se(q, cfg.alpha);

    if (q.q75() - q.q25() <= 0.0) {
        // Point mass (possibly with stray outer spread): no skew gate.
        s.sk = 0.0;
        s.path = FitPath::Normal;
        s.y_hat = q.q50();
        s.se_hat = s.se_star;
        s.degenerate = s.se_star == 0.0;
        return s;
    }

    s.sk = bowley_skewness(q);
    if (std::fabs(s.sk) > cfg.skew_threshold) {
        const GammaFitResult fit = fit_gamma_to_quantiles(q, cfg.gamma_fit);
        s.path = FitPath::Gamma;
        s.y_hat = fit.mean;
        s.se_hat = fit.sd;
    } else {
        s.path = FitPath::Normal;
        s.y_hat = q.q50();
        s.se_hat = s.se_star;
    }
    return s;
}

} // namespace metapool
