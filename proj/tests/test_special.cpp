#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "metapool/errors.hpp"
#include "metapool/special.hpp"
#include "oracles.hpp"

using namespace metapool;

TEST_CASE("normal quantile matches reference values") {
    CHECK(normal_quantile(0.95) == doctest::Approx(1.6448536269514722).epsilon(1e-12));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.9599639845400542).epsilon(1e-12));
    CHECK(normal_quantile(0.5) == 0.0);
    CHECK(normal_quantile(0.05) == doctest::Approx(-1.6448536269514722).epsilon(1e-12));
}

TEST_CASE("normal quantile round trips through the erfc-based CDF") {
    for (double p = 0.0005; p < 1.0; p += 0.0125) {
        CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(0).scale(0).epsilon(1e-12));
    }
    // independent bisection oracle
    for (double p : {0.001, 0.2, 0.5, 0.77, 0.999}) {
        CHECK(std::fabs(normal_quantile(p) - oracle::normal_quantile(p)) < 1e-10);
    }
}

TEST_CASE("normal quantile rejects out-of-range probabilities") {
    CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
    CHECK_THROWS_AS(normal_quantile(1.0), DomainError);
    CHECK_THROWS_AS(normal_quantile(-0.1), DomainError);
}

TEST_CASE("gamma quantile: exponential closed form at shape 1") {
    oracle::Rng rng(7);
    CHECK(gamma_quantile(0.5, 1.0, 1.0) == doctest::Approx(0.6931471805599453).epsilon(1e-12));
    for (int i = 0; i < 50; ++i) {
        const double p = rng.uniform(0.01, 0.99);
        const double lambda = rng.uniform(0.1, 10.0);
        CHECK(gamma_quantile(p, 1.0, lambda) ==
              doctest::Approx(-std::log1p(-p) / lambda).epsilon(1e-10));
    }
}

TEST_CASE("gamma quantile agrees with the quadrature oracle") {
    CHECK(gamma_quantile(0.5, 4.0, 2.0) == doctest::Approx(1.8360303744254481).epsilon(1e-9));
    CHECK(std::fabs(gamma_quantile(0.5, 4.0, 2.0) - oracle::gamma_quantile(0.5, 4.0, 2.0)) < 1e-8);
    CHECK(std::fabs(gamma_quantile(0.9, 0.7, 3.0) - oracle::gamma_quantile(0.9, 0.7, 3.0)) < 1e-8);
}

TEST_CASE("gamma quantile round trip and monotonicity") {
    oracle::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const double p = rng.uniform(0.001, 0.999);
        const double shape = std::exp(rng.uniform(std::log(1e-2), std::log(1e5)));
        const double rate = std::exp(rng.uniform(std::log(1e-4), std::log(1e6)));
        const double x = gamma_quantile(p, shape, rate);
        CHECK(x > 0.0);
        CHECK(gamma_cdf(x, shape, rate) == doctest::Approx(p).epsilon(0).scale(1).epsilon(1e-9));
    }
    double prev = 0.0;
    for (double p = 0.02; p < 1.0; p += 0.02) {
        const double x = gamma_quantile(p, 3.3, 0.7);
        CHECK(x > prev);
        prev = x;
    }
}

TEST_CASE("t quantile reference values and symmetry") {
    CHECK(t_quantile(0.95, 2.0) == doctest::Approx(2.9199855803537257).epsilon(1e-9));
    CHECK(t_quantile(0.5, 7.0) == 0.0);
    CHECK(t_quantile(0.975, 1e6) == doctest::Approx(1.959964).epsilon(1e-4));
    oracle::Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const double p = rng.uniform(0.01, 0.49);
        const double df = rng.uniform(1.0, 50.0);
        CHECK(t_quantile(p, df) == doctest::Approx(-t_quantile(1.0 - p, df)).epsilon(1e-10));
    }
}

TEST_CASE("t quantile agrees with the quadrature oracle") {
    for (double df : {1.0, 2.0, 5.0, 30.0}) {
        for (double p : {0.6, 0.9, 0.95, 0.99}) {
            CHECK(std::fabs(t_quantile(p, df) - oracle::t_quantile(p, df)) < 1e-8);
        }
    }
}

TEST_CASE("t quantile round trip and monotonicity") {
    oracle::Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const double p = rng.uniform(0.005, 0.995);
        const double df = rng.uniform(0.5, 200.0);
        CHECK(t_cdf(t_quantile(p, df), df) == doctest::Approx(p).epsilon(0).scale(1).epsilon(1e-9));
    }
    double prev = -1e9;
    for (double p = 0.02; p < 1.0; p += 0.02) {
        const double x = t_quantile(p, 4.0);
        CHECK(x > prev);
        prev = x;
    }
    CHECK_THROWS_AS(t_quantile(0.9, 0.0), DomainError);
}

TEST_CASE("incomplete beta basic identities") {
    CHECK(beta_inc(1.0, 1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-12));
    for (double x : {0.1, 0.4, 0.8}) {
        CHECK(beta_inc(2.5, 1.5, x) ==
              doctest::Approx(1.0 - beta_inc(1.5, 2.5, 1.0 - x)).epsilon(1e-11));
    }
}
