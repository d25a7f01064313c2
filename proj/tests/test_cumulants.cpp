#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "qent/cumulants.hpp"
#include "qent/ensemble.hpp"

using namespace qent;

TEST_CASE("SystemDims validation") {
    CHECK_THROWS_AS(SystemDims(0, 3), domain_error);
    CHECK_THROWS_AS(SystemDims(4, 3), domain_error);
    CHECK_NOTHROW(SystemDims(3, 3));
}

TEST_CASE("coefficients at (2,2)") {
    CoefficientSet c = hs_coefficients(SystemDims(2, 2));
    CHECK(c.d2 == Catch::Approx(22.0 / 35.0).epsilon(1e-14));
    CHECK(c.d4 == Catch::Approx(9.0 / 175.0).epsilon(1e-14));
    CHECK(c.a1 == 1.0);
    CHECK(c.b1 == -1.0);
    CHECK(c.c1 == 1.0);
    CHECK(c.d1 == -1.0);
}

TEST_CASE("leading coefficients are dimension-independent") {
    for (int m = 1; m <= 6; ++m)
        for (int n = m; n <= 9; n += 2) {
            CoefficientSet c = hs_coefficients(SystemDims(m, n));
            CHECK(c.a1 == 1.0);
            CHECK(c.b1 == -1.0);
            CHECK(c.c1 == 1.0);
            CHECK(c.d1 == -1.0);
        }
}

TEST_CASE("cumulants at (2,2) against hand-computed rationals") {
    CumulantSet k = hs_cumulants(SystemDims(2, 2));
    CHECK(k.k1 == Catch::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(k.k2 == Catch::Approx(13.0 / 36.0 - zeta2 / 5.0).epsilon(1e-13));
}

TEST_CASE("m = 1 collapse: all four cumulants vanish") {
    for (int n = 1; n <= 50; ++n) {
        CumulantSet k = hs_cumulants(SystemDims(1, n));
        CHECK(std::abs(k.k1) <= 1e-12);
        CHECK(std::abs(k.k2) <= 1e-12);
        CHECK(std::abs(k.k3) <= 1e-12);
        CHECK(std::abs(k.k4) <= 1e-12);
    }
}

TEST_CASE("mean entropy sits inside (0, ln m)") {
    for (int m = 2; m <= 10; ++m)
        for (int n = m; n <= 14; n += 3) {
            CumulantSet k = hs_cumulants(SystemDims(m, n));
            CHECK(k.k1 > 0.0);
            CHECK(k.k1 < std::log(static_cast<double>(m)));
            CHECK(k.k2 > 0.0);
        }
}

TEST_CASE("induced cumulants reference values") {
    InducedCumulants a = induced_cumulants(SystemDims(1, 1));
    CHECK(a.k1T == Catch::Approx(1.0 - euler_gamma).epsilon(1e-14));
    InducedCumulants b = induced_cumulants(SystemDims(2, 2));
    CHECK(b.k1T == Catch::Approx(7.0 - 4.0 * euler_gamma).epsilon(1e-14));
}

TEST_CASE("induced k4T at (1,1) against Monte Carlo of theta ln theta") {
    // theta ~ Gamma(1); 2e6 draws, fourth k-statistic within 5 SE
    RngConfig cfg;
    cfg.seed = 4242;
    auto batches = run_streams(SystemDims(1, 1), 2000000, cfg, 2,
                               [](const EigenSample& s) { return xlogx(s.theta[0]); });
    McEstimate est = pool_batches(batches);
    double closed = induced_cumulants(SystemDims(1, 1)).k4T;
    INFO("k4 = " << est.k.k4 << " closed = " << closed << " se = " << est.se[3]);
    CHECK(std::abs(est.k.k4 - closed) < 5.0 * est.se[3]);
}

TEST_CASE("r log moments") {
    CHECK(r_log_moments(SystemDims(2, 2), 0) == Catch::Approx(840.0).epsilon(1e-14));
    double expect = 24.0 * (25.0 / 12.0 - euler_gamma);
    CHECK(r_log_moments(SystemDims(1, 1), 1) == Catch::Approx(expect).epsilon(1e-13));
    CHECK(r_log_moments(SystemDims(1, 1), 1) == Catch::Approx(36.1468).margin(2e-4));
    double p0 = polygamma_int(0, 5), p1 = polygamma_int(1, 5);
    CHECK(r_log_moments(SystemDims(1, 1), 2) ==
          Catch::Approx(24.0 * (p0 * p0 + p1)).epsilon(1e-13));
    CHECK_THROWS_AS(r_log_moments(SystemDims(1, 1), 5), domain_error);
}

TEST_CASE("r log moments against quadrature over the gamma density") {
    for (auto [m, n] : {std::pair{1, 3}, {2, 2}, {2, 5}}) {
        SystemDims d(m, n);
        double mn = static_cast<double>(d.mn());
        for (int l = 0; l <= 4; ++l) {
            double quad = integrate_exp_tail(
                [&](double r) {
                    double lg = 1.0;
                    for (int i = 0; i < l; ++i) lg *= std::log(r);
                    return std::exp(-r + (mn + 3.0) * std::log(r) - std::lgamma(mn)) * lg;
                },
                mn + 3.0, mn + 3.0, 1e-10);
            CHECK(r_log_moments(d, l) == Catch::Approx(quad).epsilon(1e-8));
        }
    }
}

TEST_CASE("kappa4 via the induced-cumulant relation equals the Table-1 form") {
    for (int m = 2; m <= 10; ++m)
        for (int n = m; n <= 10; ++n) {
            double direct = hs_cumulants(SystemDims(m, n)).k4;
            double bridged = kappa4_via_relation(SystemDims(m, n));
            INFO("m=" << m << " n=" << n);
            CHECK(bridged == Catch::Approx(direct).epsilon(1e-10));
        }
    // degenerate lines collapse through the same route
    CHECK(std::abs(kappa4_via_relation(SystemDims(1, 5))) <= 1e-10);
}

TEST_CASE("moment/cumulant maps") {
    MomentSet normal = moments_from_cumulants({0.0, 1.0, 0.0, 0.0});
    CHECK(normal.m1 == 0.0);
    CHECK(normal.m2 == 1.0);
    CHECK(normal.m3 == 0.0);
    CHECK(normal.m4 == 3.0);
    MomentSet point = moments_from_cumulants({1.0, 0.0, 0.0, 0.0});
    CHECK(point.m1 == 1.0);
    CHECK(point.m2 == 1.0);
    CHECK(point.m3 == 1.0);
    CHECK(point.m4 == 1.0);
}

TEST_CASE("moment/cumulant round trip") {
    CumulantSet k{0.3, 0.02, -0.001, 0.0002};
    CumulantSet back = cumulants_from_moments(moments_from_cumulants(k));
    CHECK(back.k1 == Catch::Approx(k.k1).margin(1e-14));
    CHECK(back.k2 == Catch::Approx(k.k2).margin(1e-14));
    CHECK(back.k3 == Catch::Approx(k.k3).margin(1e-14));
    CHECK(back.k4 == Catch::Approx(k.k4).margin(1e-14));
    RngStream rng(5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        CumulantSet r{2.0 * rng.next_uniform() - 1.0, rng.next_uniform(),
                      0.2 * (rng.next_uniform() - 0.5), 0.1 * (rng.next_uniform() - 0.5)};
        CumulantSet rb = cumulants_from_moments(moments_from_cumulants(r));
        CHECK(std::abs(rb.k1 - r.k1) <= 1e-13);
        CHECK(std::abs(rb.k2 - r.k2) <= 1e-13);
        CHECK(std::abs(rb.k3 - r.k3) <= 1e-13);
        CHECK(std::abs(rb.k4 - r.k4) <= 1e-13);
    }
}

TEST_CASE("skewness and kurtosis") {
    CHECK_THROWS_AS(kurtosis(SystemDims(1, 3)), domain_error);
    CHECK_THROWS_AS(skewness(SystemDims(1, 3)), domain_error);
    CHECK(std::abs(kurtosis(SystemDims(64, 64))) < std::abs(kurtosis(SystemDims(8, 8))));
}

TEST_CASE("kurtosis decays along the diagonal") {
    double prev = std::abs(kurtosis(SystemDims(5, 5)));
    for (int m : {10, 20, 40, 80}) {
        double cur = std::abs(kurtosis(SystemDims(m, m)));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("m=2 quadrature oracle matches the closed forms") {
    for (int n : {2, 3, 5, 10}) {
        CumulantSet oracle = m2_oracle_cumulants(n);
        CumulantSet exact = hs_cumulants(SystemDims(2, n));
        INFO("n=" << n);
        auto close = [](double got, double want) {
            double tol = std::abs(want) < 1e-4 ? 1e-10 : 1e-8 * std::abs(want);
            return std::abs(got - want) <= tol;
        };
        CHECK(close(oracle.k1, exact.k1));
        CHECK(close(oracle.k2, exact.k2));
        CHECK(close(oracle.k3, exact.k3));
        CHECK(close(oracle.k4, exact.k4));
    }
    CHECK(m2_oracle_cumulants(2).k1 == Catch::Approx(1.0 / 3.0).epsilon(1e-8));
    CHECK_THROWS_AS(m2_oracle_cumulants(1), domain_error);
}

TEST_CASE("m2 oracle density normalizes") {
    for (int n : {2, 4, 9}) {
        auto weight = [n](double lam) {
            double u = 2.0 * lam - 1.0;
            return u * u * std::pow(lam * (1.0 - lam), static_cast<double>(n - 2));
        };
        double z = integrate(weight, 0.0, 1.0, 1e-14);
        // exact beta-integral value: 4B(n+1,n-1) - 4B(n,n-1) + B(n-1,n-1)
        auto beta = [](double a, double b) {
            return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
        };
        double exact = 4.0 * beta(n + 1.0, n - 1.0) - 4.0 * beta(n + 0.0, n - 1.0) +
                       beta(n - 1.0, n - 1.0);
        CHECK(z == Catch::Approx(exact).epsilon(1e-12));
    }
}
