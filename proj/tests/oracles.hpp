// Independent numerical oracles for the test suites. These deliberately avoid
// the library's series/continued-fraction code paths: CDFs come from adaptive
// Simpson quadrature of the densities and quantiles from bisection, so any
// agreement with the implementation is evidence, not tautology.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include <Eigen/Core>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fb, double fm, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson(f, a, m, fa, fm, flm, tol / 2.0, depth - 1) +
           simpson(f, m, b, fm, fb, frm, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    if (b <= a) return 0.0;
    const double m = 0.5 * (a + b);
    return simpson(f, a, b, f(a), f(b), f(m), tol, 48);
}

inline double gamma_pdf(double x, double shape, double rate) {
    if (x <= 0.0) return 0.0;
    return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(x) - rate * x -
                    std::lgamma(shape));
}

inline double gamma_cdf(double x, double shape, double rate) {
    if (x <= 0.0) return 0.0;
    return integrate([&](double t) { return gamma_pdf(t, shape, rate); }, 0.0, x);
}

inline double gamma_quantile(double p, double shape, double rate) {
    double lo = 0.0;
    double hi = (shape + 10.0 * std::sqrt(shape) + 10.0) / rate;
    while (gamma_cdf(hi, shape, rate) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (gamma_cdf(mid, shape, rate) < p) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-13 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

inline double t_pdf(double x, double df) {
    const double ln = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                      0.5 * std::log(df * M_PI);
    return std::exp(ln - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

inline double t_cdf(double x, double df) {
    if (x == 0.0) return 0.5;
    const double tail = integrate([&](double t) { return t_pdf(t, df); }, 0.0, std::fabs(x));
    return x > 0.0 ? 0.5 + tail : 0.5 - tail;
}

inline double t_quantile(double p, double df) {
    double lo = -1.0, hi = 1.0;
    while (t_cdf(lo, df) > p) lo *= 2.0;
    while (t_cdf(hi, df) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (t_cdf(mid, df) < p) lo = mid;
        else hi = mid;
        if (hi - lo < 1e-12 * (1.0 + std::fabs(hi))) break;
    }
    return 0.5 * (lo + hi);
}

inline double normal_quantile(double p) {
    double lo = -1.0, hi = 1.0;
    auto cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    while (cdf(lo) > p) lo *= 2.0;
    while (cdf(hi) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Best restricted log-likelihood over an n-point linear grid on [0, B].
inline double reml_grid_best(const Eigen::ArrayXd& y, const Eigen::ArrayXd& v, double B, int n,
                             const std::function<double(double)>& loglik) {
    (void)y;
    (void)v;
    double best = -1e300;
    for (int i = 0; i < n; ++i) {
        const double tau2 = B * i / (n - 1.0);
        best = std::max(best, loglik(tau2));
    }
    return best;
}

/// Deterministic xorshift RNG for property tests (independent of the library's
/// mt19937_64 usage).
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int index(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

} // namespace oracle
