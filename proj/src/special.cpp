#include "metapool/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "metapool/errors.hpp"

namespace metapool {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

} // namespace

double normal_quantile(double p) {
    require(p > 0.0 && p < 1.0, "normal_quantile: p must be in (0,1)");
    // Wichura (1988), algorithm AS 241, PPND16.
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                  3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -val : val;
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace {

// P(a, x) by power series, valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by Lentz continued fraction, valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double gamma_p(double a, double x) {
    require(a > 0.0, "gamma_p: shape must be positive");
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_cdf(double x, double shape, double rate) {
    require(shape > 0.0 && rate > 0.0, "gamma_cdf: shape and rate must be positive");
    return gamma_p(shape, x * rate);
}

double gamma_quantile(double p, double shape, double rate) {
    require(p > 0.0 && p < 1.0, "gamma_quantile: p must be in (0,1)");
    require(shape > 0.0 && rate > 0.0, "gamma_quantile: shape and rate must be positive");

    // Solve P(shape, s) = p for the standardized variable s, then divide by rate.
    // Wilson-Hilferty start; log-start for small shapes where WH fails.
    const double z = normal_quantile(p);
    double s;
    {
        const double c = 1.0 / (9.0 * shape);
        const double wh = shape * std::pow(1.0 - c + z * std::sqrt(c), 3.0);
        if (wh > 0.0 && std::isfinite(wh)) {
            s = wh;
        } else {
            s = std::exp((std::log(p) + std::lgamma(shape + 1.0)) / shape);
        }
    }
    if (s <= 0.0 || !std::isfinite(s)) s = shape;

    // Bracketed Newton on P(shape, s) - p; pdf of the standardized gamma is the
    // derivative. Bisect whenever a Newton step leaves the bracket.
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 200; ++it) {
        const double f = gamma_p(shape, s) - p;
        if (f > 0.0) hi = s;
        else lo = s;
        const double logpdf = (shape - 1.0) * std::log(s) - s - std::lgamma(shape);
        const double pdf = std::exp(logpdf);
        double next;
        if (pdf > 0.0 && std::isfinite(pdf)) {
            next = s - f / pdf;
        } else {
            next = std::numeric_limits<double>::quiet_NaN();
        }
        if (!(next > lo && next < hi)) {
            next = std::isinf(hi) ? s * 2.0 : 0.5 * (lo + hi);
        }
        if (std::fabs(next - s) <= 1e-14 * std::fabs(s) + 1e-300) {
            s = next;
            break;
        }
        s = next;
    }
    return s / rate;
}

double beta_inc(double a, double b, double x) {
    require(a > 0.0 && b > 0.0, "beta_inc: a and b must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    const double front = std::exp(a * std::log(x) + b * std::log(1.0 - x) - lbeta);
    // Use the continued fraction directly when it converges fast, else the
    // symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
    const bool swap = x >= (a + 1.0) / (a + b + 2.0);
    const double aa = swap ? b : a;
    const double bb = swap ? a : b;
    const double xx = swap ? 1.0 - x : x;

    // Lentz continued fraction for I_x.
    double c = 1.0;
    double d = 1.0 - (aa + bb) * xx / (aa + 1.0);
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const double m2 = 2.0 * m;
        double num = m * (bb - m) * xx / ((aa + m2 - 1.0) * (aa + m2));
        d = 1.0 + num * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        num = -(aa + m) * (aa + bb + m) * xx / ((aa + m2) * (aa + m2 + 1.0));
        d = 1.0 + num * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) break;
    }
    const double cf = front * h / aa;
    // front was computed for the original (a,b,x); recompute for swapped case.
    if (!swap) return cf;
    const double front_sw = std::exp(aa * std::log(xx) + bb * std::log(1.0 - xx) - lbeta);
    return 1.0 - front_sw * h / aa;
}

double t_cdf(double x, double df) {
    require(df > 0.0, "t_cdf: df must be positive");
    if (x == 0.0) return 0.5;
    const double w = df / (df + x * x);
    const double half_tail = 0.5 * beta_inc(0.5 * df, 0.5, w);
    return x > 0.0 ? 1.0 - half_tail : half_tail;
}

double t_quantile(double p, double df) {
    require(p > 0.0 && p < 1.0, "t_quantile: p must be in (0,1)");
    require(df > 0.0, "t_quantile: df must be positive");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -t_quantile(1.0 - p, df);

    // Start from the normal quantile, expand a bracket, then bracketed Newton
    // with the analytic t density.
    const double log_norm =
        std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) - 0.5 * std::log(df * M_PI);
    auto pdf = [&](double x) {
        return std::exp(log_norm - 0.5 * (df + 1.0) * std::log1p(x * x / df));
    };
    double lo = 0.0;
    double hi = std::max(1.0, normal_quantile(p) * 2.0);
    while (t_cdf(hi, df) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) break;
    }
    double x = std::min(std::max(normal_quantile(p), lo), hi);
    for (int it = 0; it < 200; ++it) {
        const double f = t_cdf(x, df) - p;
        if (f > 0.0) hi = x;
        else lo = x;
        const double dx = pdf(x);
        double next = (dx > 0.0) ? x - f / dx : std::numeric_limits<double>::quiet_NaN();
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 1e-13 * (1.0 + std::fabs(x))) {
            x = next;
            break;
        }
        x = next;
    }
    return x;
}

} // namespace metapool
