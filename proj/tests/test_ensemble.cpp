#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "qent/ensemble.hpp"

using namespace qent;
using cd = std::complex<double>;

TEST_CASE("jacobi eigensolver on closed-form matrices") {
    auto ev = hermitian_eigenvalues({cd(1, 0), cd(0, 0), cd(0, 0), cd(2, 0)}, 2);
    CHECK(ev[0] == Catch::Approx(1.0).margin(1e-13));
    CHECK(ev[1] == Catch::Approx(2.0).margin(1e-13));

    // [[2, i], [-i, 2]] has eigenvalues 1 and 3
    auto ev2 = hermitian_eigenvalues({cd(2, 0), cd(0, 1), cd(0, -1), cd(2, 0)}, 2);
    CHECK(ev2[0] == Catch::Approx(1.0).margin(1e-12));
    CHECK(ev2[1] == Catch::Approx(3.0).margin(1e-12));
}

TEST_CASE("jacobi eigensolver rejects non-Hermitian input") {
    CHECK_THROWS_AS(hermitian_eigenvalues({cd(1, 0), cd(1, 0), cd(2, 0), cd(1, 0)}, 2),
                    domain_error);
}

TEST_CASE("eigensolver backward checks on random Wishart matrices") {
    RngStream rng(11, 0);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + static_cast<int>(rng.next_u64() % 7);
        int n = m + static_cast<int>(rng.next_u64() % 5);
        const double rh = std::sqrt(0.5);
        std::vector<cd> x(static_cast<std::size_t>(m) * n);
        for (auto& e : x) e = cd(rh * rng.next_normal(), rh * rng.next_normal());
        std::vector<cd> w(static_cast<std::size_t>(m) * m);
        double trace = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                cd s = 0;
                for (int k = 0; k < n; ++k)
                    s += x[static_cast<std::size_t>(i) * n + k] *
                         std::conj(x[static_cast<std::size_t>(j) * n + k]);
                w[static_cast<std::size_t>(i) * m + j] = s;
                if (i == j) trace += s.real();
            }
        auto ev = hermitian_eigenvalues(w, m);
        double sum = 0.0;
        for (int i = 0; i + 1 < m; ++i) CHECK(ev[i] <= ev[i + 1]);
        for (double v : ev) {
            CHECK(v >= -1e-12);
            sum += v;
        }
        CHECK(sum == Catch::Approx(trace).epsilon(1e-10));
    }
}

TEST_CASE("eigen samples satisfy the fixed-trace constraint") {
    RngStream rng(3, 9);
    for (int trial = 0; trial < 100; ++trial) {
        EigenSample s = sample_wishart_eigenvalues(SystemDims(4, 7), rng);
        double lam_sum = 0.0, th_sum = 0.0;
        for (double v : s.lambda) lam_sum += v;
        for (double v : s.theta) th_sum += v;
        CHECK(std::abs(lam_sum - 1.0) <= 1e-12);
        CHECK(th_sum == Catch::Approx(s.r).epsilon(1e-12));
        for (std::size_t i = 0; i < s.lambda.size(); ++i)
            CHECK(s.lambda[i] == Catch::Approx(s.theta[i] / s.r).margin(1e-14));
    }
}

TEST_CASE("entropy draws: closed-form points") {
    EigenSample sym;
    sym.theta = {1.0, 1.0};
    sym.r = 2.0;
    sym.lambda = {0.5, 0.5};
    EntropyDraw d = entropy_from_sample(sym);
    CHECK(d.S == Catch::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(d.T == Catch::Approx(0.0).margin(1e-14));

    EigenSample single;
    single.theta = {2.0};
    single.r = 2.0;
    single.lambda = {1.0};
    CHECK(entropy_from_sample(single).S == Catch::Approx(0.0).margin(1e-14));

    EigenSample skew;
    skew.theta = {1.0, 3.0};
    skew.r = 4.0;
    skew.lambda = {0.25, 0.75};
    EntropyDraw e = entropy_from_sample(skew);
    CHECK(e.T == Catch::Approx(3.0 * std::log(3.0)).epsilon(1e-14));
    CHECK(e.S == Catch::Approx(std::log(4.0) - 0.75 * std::log(3.0)).epsilon(1e-13));
}

TEST_CASE("S = (r ln r - T)/r holds on random draws") {
    RngStream rng(17, 2);
    for (int trial = 0; trial < 200; ++trial) {
        EigenSample s = sample_wishart_eigenvalues(SystemDims(3, 5), rng);
        EntropyDraw d = entropy_from_sample(s);
        double via_T = (s.r * std::log(s.r) - d.T) / s.r;
        CHECK(d.S == Catch::Approx(via_T).margin(1e-10));
        CHECK(d.S >= 0.0);
        CHECK(d.S <= std::log(3.0) + 1e-12);
    }
}

TEST_CASE("trace of the m=1 ensemble follows Gamma(n)") {
    // r ~ Gamma(n): mean n, variance n
    RngConfig cfg;
    cfg.seed = 7;
    const int n = 6;
    auto batches = run_streams(SystemDims(1, n), 400000, cfg, 2,
                               [](const EigenSample& s) { return s.r; });
    McEstimate est = pool_batches(batches);
    CHECK(std::abs(est.k.k1 - n) < 5.0 * est.se[0]);
    CHECK(std::abs(est.k.k2 - n) < 5.0 * est.se[1]);
}

TEST_CASE("streaming stats on tiny closed-form inputs") {
    StreamingStats s;
    for (int i = 0; i < 5; ++i) s.add(3.25);
    CumulantSet k = s.k_statistics();
    CHECK(k.k1 == Catch::Approx(3.25).epsilon(1e-15));
    CHECK(k.k2 == Catch::Approx(0.0).margin(1e-12));
    CHECK(k.k3 == Catch::Approx(0.0).margin(1e-12));
    CHECK(k.k4 == Catch::Approx(0.0).margin(1e-11));

    StreamingStats u;
    u.add(1.0);
    CHECK_THROWS_AS(u.k_statistics(), domain_error);
}

TEST_CASE("3-sample k-statistics on {1,2,3}") {
    StreamingStats s3;
    s3.add(1.0);
    s3.add(2.0);
    s3.add(3.0);
    double n = 3, p1 = s3.power_sum(1), p2 = s3.power_sum(2), p3 = s3.power_sum(3);
    double k1 = p1 / n;
    double k2 = (n * p2 - p1 * p1) / (n * (n - 1.0));
    double k3 = (2.0 * p1 * p1 * p1 - 3.0 * n * p1 * p2 + n * n * p3) /
                (n * (n - 1.0) * (n - 2.0));
    CHECK(k1 == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(k2 == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(k3 == Catch::Approx(0.0).margin(1e-13));
}

TEST_CASE("k-statistics are unbiased over an enumerable population") {
    // average k2, k3 over all 27 ordered triples from {0,1,2}: the mean must
    // reproduce the population cumulants exactly (k-statistics' defining
    // property), kappa_2 = 2/3 and kappa_3 = 0 here
    const double pop[3] = {0.0, 1.0, 2.0};
    double mean_k2 = 0.0, mean_k3 = 0.0;
    for (double a : pop)
        for (double b : pop)
            for (double c : pop) {
                StreamingStats s3;
                s3.add(a);
                s3.add(b);
                s3.add(c);
                double n = 3, p1 = s3.power_sum(1), p2 = s3.power_sum(2),
                       p3 = s3.power_sum(3);
                mean_k2 += (n * p2 - p1 * p1) / (n * (n - 1.0));
                mean_k3 += (2.0 * p1 * p1 * p1 - 3.0 * n * p1 * p2 + n * n * p3) /
                           (n * (n - 1.0) * (n - 2.0));
            }
    CHECK(mean_k2 / 27.0 == Catch::Approx(2.0 / 3.0).epsilon(1e-13));
    CHECK(mean_k3 / 27.0 == Catch::Approx(0.0).margin(1e-13));
}

TEST_CASE("k4 is unbiased over quadruples of a two-point population") {
    // population {0,1} with kappa_4 = -1/8; enumerate all 16 quadruples
    StreamingStats probe;
    double mean_k4 = 0.0;
    for (int mask = 0; mask < 16; ++mask) {
        StreamingStats s;
        for (int b = 0; b < 4; ++b) s.add((mask >> b) & 1 ? 1.0 : 0.0);
        mean_k4 += s.k_statistics().k4;
    }
    CHECK(mean_k4 / 16.0 == Catch::Approx(-0.125).epsilon(1e-12));
}

TEST_CASE("k-statistics of standard normal draws") {
    RngStream rng(100, 4);
    std::vector<StreamingStats> batches(40);
    for (int b = 0; b < 40; ++b)
        for (int i = 0; i < 25000; ++i) batches[b].add(rng.next_normal());
    McEstimate est = pool_batches(batches);
    CHECK(std::abs(est.k.k1 - 0.0) < 5.0 * est.se[0]);
    CHECK(std::abs(est.k.k2 - 1.0) < 5.0 * est.se[1]);
    CHECK(std::abs(est.k.k3 - 0.0) < 5.0 * est.se[2]);
    CHECK(std::abs(est.k.k4 - 0.0) < 5.0 * est.se[3]);
}

TEST_CASE("merge is associative and order-independent") {
    RngStream rng(8, 8);
    std::vector<StreamingStats> parts(8);
    for (int p = 0; p < 8; ++p)
        for (int i = 0; i < 5000; ++i) parts[p].add(rng.next_normal() * 0.3 + 1.1);
    StreamingStats fwd;
    for (int p = 0; p < 8; ++p) fwd.merge(parts[p]);
    StreamingStats rev;
    for (int p = 7; p >= 0; --p) rev.merge(parts[p]);
    StreamingStats tree;
    {
        StreamingStats left, right;
        for (int p = 0; p < 4; ++p) left.merge(parts[p]);
        for (int p = 4; p < 8; ++p) right.merge(parts[p]);
        tree.merge(left);
        tree.merge(right);
    }
    CumulantSet a = fwd.k_statistics(), b = rev.k_statistics(), c = tree.k_statistics();
    CHECK(a.k1 == Catch::Approx(b.k1).epsilon(1e-12).margin(1e-12));
    CHECK(a.k4 == Catch::Approx(b.k4).epsilon(1e-12).margin(1e-12));
    CHECK(a.k1 == Catch::Approx(c.k1).epsilon(1e-12).margin(1e-12));
    CHECK(a.k4 == Catch::Approx(c.k4).epsilon(1e-12).margin(1e-12));
}

TEST_CASE("fixed RNG config reproduces k-statistics across thread counts") {
    SystemDims d(3, 4);
    RngConfig cfg;
    cfg.seed = 2024;
    cfg.streams = 32;
    auto one = pool_batches(run_streams(d, 40000, cfg, 1, [](const EigenSample& s) {
        return entropy_from_sample(s).S;
    }));
    auto four = pool_batches(run_streams(d, 40000, cfg, 4, [](const EigenSample& s) {
        return entropy_from_sample(s).S;
    }));
    CHECK(one.k.k1 == four.k.k1);  // bitwise: same streams, same fold order
    CHECK(one.k.k4 == four.k.k4);
    CHECK(one.se[2] == four.se[2]);
}

TEST_CASE("Monte Carlo entropy cumulants match the closed forms") {
    for (auto [m, n] : {std::pair{2, 2}, {3, 4}, {4, 4}}) {
        SystemDims d(m, n);
        RngConfig cfg;
        cfg.seed = 31337;
        McEstimate est = mc_entropy_cumulants(d, 300000, cfg, 2);
        CumulantSet exact = hs_cumulants(d);
        INFO("m=" << m << " n=" << n << " k1hat=" << est.k.k1 << " k1=" << exact.k1);
        CHECK(std::abs(est.k.k1 - exact.k1) < 5.0 * est.se[0]);
        CHECK(std::abs(est.k.k2 - exact.k2) < 5.0 * est.se[1]);
        CHECK(std::abs(est.k.k3 - exact.k3) < 5.0 * est.se[2]);
        CHECK(std::abs(est.k.k4 - exact.k4) < 5.0 * est.se[3]);
    }
}

TEST_CASE("trace and entropy are uncorrelated") {
    SystemDims d(3, 3);
    RngConfig cfg;
    cfg.seed = 555;
    const int total = 100000;
    double sr = 0, ss = 0, srs = 0, sr2 = 0, ss2 = 0;
    for (int stream = 0; stream < 8; ++stream) {
        RngStream rng(cfg.seed, stream);
        for (int i = 0; i < total / 8; ++i) {
            EigenSample smp = sample_wishart_eigenvalues(d, rng);
            double S = entropy_from_sample(smp).S;
            sr += smp.r;
            ss += S;
            srs += smp.r * S;
            sr2 += smp.r * smp.r;
            ss2 += S * S;
        }
    }
    double n = total;
    double cov = srs / n - (sr / n) * (ss / n);
    double vr = sr2 / n - (sr / n) * (sr / n);
    double vs = ss2 / n - (ss / n) * (ss / n);
    double corr = cov / std::sqrt(vr * vs);
    // SE of a sample correlation near zero is ~ 1/sqrt(n)
    CHECK(std::abs(corr) < 5.0 / std::sqrt(n));
}
