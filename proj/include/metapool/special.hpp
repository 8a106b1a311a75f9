#pragma once

namespace metapool {

/// Inverse standard normal CDF (Wichura's PPND16 rational approximation).
/// Absolute accuracy better than 1e-10 on (0, 1). Throws DomainError outside.
double normal_quantile(double p);

/// Standard normal CDF.
double normal_cdf(double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a),
/// by power series for x < a + 1 and continued fraction otherwise.
double gamma_p(double a, double x);

/// Gamma(shape, rate) CDF at x.
double gamma_cdf(double x, double shape, double rate);

/// Inverse Gamma(shape, rate) CDF. Wilson-Hilferty start, then bracketed
/// Newton on P(shape, rate*x). Relative accuracy ~1e-12; the round trip
/// gamma_cdf(gamma_quantile(p)) = p holds within 1e-9. Throws DomainError.
double gamma_quantile(double p, double shape, double rate);

/// Student-t CDF with df degrees of freedom (via the regularized
/// incomplete beta function).
double t_cdf(double x, double df);

/// Inverse Student-t CDF. Absolute accuracy better than 1e-8.
/// Throws DomainError for p outside (0,1) or df <= 0.
double t_quantile(double p, double df);

/// Regularized incomplete beta I_x(a, b) by continued fraction.
double beta_inc(double a, double b, double x);

} // namespace metapool
