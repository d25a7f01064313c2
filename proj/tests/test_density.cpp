#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "qent/density.hpp"
#include "qent/ensemble.hpp"
#include "qent/quadrature.hpp"

using namespace qent;

TEST_CASE("standardize") {
    CumulantSet k = hs_cumulants(SystemDims(4, 4));
    CHECK(standardize(k.k1, k) == Catch::Approx(0.0).margin(1e-14));
    CHECK(standardize(k.k1 + std::sqrt(k.k2), k) == Catch::Approx(1.0).epsilon(1e-13));
    double x = standardize(std::log(4.0), k);
    CHECK(x == Catch::Approx((std::log(4.0) - k.k1) / std::sqrt(k.k2)).epsilon(1e-14));
    CumulantSet degenerate{0.5, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(standardize(0.5, degenerate), domain_error);
}

TEST_CASE("gram-charlier point values") {
    CumulantSet k = hs_cumulants(SystemDims(4, 4));
    double phi0 = 1.0 / std::sqrt(2.0 * 3.14159265358979323846);
    CHECK(gram_charlier_pdf(0.0, k, DensityOrder::gaussian) ==
          Catch::Approx(phi0).epsilon(1e-14));
    CHECK(gram_charlier_pdf(0.0, k, DensityOrder::gaussian) ==
          Catch::Approx(0.3989423).margin(1e-7));
    // He3(0) = 0 so the k3 order coincides with the Gaussian at the origin
    CHECK(gram_charlier_pdf(0.0, k, DensityOrder::k3) ==
          Catch::Approx(gram_charlier_pdf(0.0, k, DensityOrder::gaussian)).epsilon(1e-15));
    // He4(0) = 3: phi(0) (1 + gamma2/8)
    double gamma2 = k.k4 / (k.k2 * k.k2);
    CHECK(gram_charlier_pdf(0.0, k, DensityOrder::k4) ==
          Catch::Approx(phi0 * (1.0 + gamma2 / 8.0)).epsilon(1e-13));
}

TEST_CASE("gram-charlier integrates to one at every order") {
    CumulantSet k = hs_cumulants(SystemDims(3, 5));
    for (DensityOrder ord : {DensityOrder::gaussian, DensityOrder::k3, DensityOrder::k4}) {
        double total = integrate([&](double x) { return gram_charlier_pdf(x, k, ord); },
                                 -12.0, 12.0, 1e-11);
        CHECK(total == Catch::Approx(1.0).margin(1e-8));
    }
}

TEST_CASE("gram-charlier corrections match the targeted standardized cumulants") {
    CumulantSet k = hs_cumulants(SystemDims(3, 4));
    double gamma1 = k.k3 / std::pow(k.k2, 1.5);
    double gamma2 = k.k4 / (k.k2 * k.k2);
    double third = integrate(
        [&](double x) { return x * x * x * gram_charlier_pdf(x, k, DensityOrder::k3); },
        -12.0, 12.0, 1e-11);
    CHECK(third == Catch::Approx(gamma1).margin(1e-6));
    double fourth = integrate(
        [&](double x) {
            return (x * x * x * x - 3.0) * gram_charlier_pdf(x, k, DensityOrder::k4);
        },
        -12.0, 12.0, 1e-11);
    CHECK(fourth == Catch::Approx(gamma2).margin(1e-6));
}

TEST_CASE("entropy is left-skewed and the corrections lift the left tail") {
    CumulantSet k = hs_cumulants(SystemDims(4, 4));
    CHECK(k.k3 < 0.0);
    double g = gram_charlier_pdf(-3.0, k, DensityOrder::gaussian);
    double c3 = gram_charlier_pdf(-3.0, k, DensityOrder::k3);
    double c4 = gram_charlier_pdf(-3.0, k, DensityOrder::k4);
    CHECK(c3 > g);
    CHECK(c4 > g);
}

TEST_CASE("histogram bookkeeping") {
    Histogram h = make_histogram(-1.0, 1.0, 4);
    for (double x : {-0.9, -0.2, 0.1, 0.3, 0.9, 2.5}) histogram_add(h, x);
    CHECK(h.total == 6);
    std::int64_t in_range = 0;
    for (auto c : h.counts) in_range += c;
    CHECK(in_range == 5);  // 2.5 falls outside
    CHECK(h.counts[0] == 1);
    CHECK(h.counts[2] == 2);
    CHECK_THROWS_AS(make_histogram(1.0, -1.0, 4), domain_error);

    Histogram other = make_histogram(-1.0, 1.0, 4);
    histogram_add(other, 0.0);
    histogram_merge(h, other);
    CHECK(h.total == 7);
    CHECK(h.counts[2] == 3);
    Histogram bad = make_histogram(-2.0, 1.0, 4);
    CHECK_THROWS_AS(histogram_merge(h, bad), domain_error);
}

TEST_CASE("identical approximations give identical tail distances") {
    Histogram h = make_histogram(-6.0, 2.0, 160);
    RngStream rng(12, 0);
    for (int i = 0; i < 20000; ++i) histogram_add(h, rng.next_normal());
    auto pdf = [](double x) {
        return 0.3989422804014327 * std::exp(-0.5 * x * x);
    };
    TailComparison cmp = tail_compare(h, pdf, pdf, 2.5);
    CHECK(cmp.dist_a == cmp.dist_b);
}

TEST_CASE("normal draws sit close to the gaussian density in the tails") {
    Histogram h = make_histogram(-6.0, 6.0, 240);
    RngStream rng(99, 3);
    for (int i = 0; i < 1000000; ++i) histogram_add(h, rng.next_normal());
    double dist = tail_distance(
        h, [](double x) { return 0.3989422804014327 * std::exp(-0.5 * x * x); }, 2.5);
    CHECK(dist < 0.003);
}

TEST_CASE("k4 correction beats k3-only in the entropy tails at (4,4)") {
    SystemDims d(4, 4);
    CumulantSet k = hs_cumulants(d);
    auto [lo, hi] = standardized_range(d);
    CHECK(hi == Catch::Approx(4.28).margin(0.05));  // support ends near +4.03
    int bins = static_cast<int>(std::lround((hi - lo) / 0.05));
    Histogram h = make_histogram(lo, hi, bins);
    RngConfig cfg;
    cfg.seed = 20210731;
    sample_standardized_histogram(d, k, 2000000, cfg, 2, h);
    TailComparison cmp = tail_compare(
        h, [&](double x) { return gram_charlier_pdf(x, k, DensityOrder::k3); },
        [&](double x) { return gram_charlier_pdf(x, k, DensityOrder::k4); }, 2.5);
    INFO("k3 tail distance " << cmp.dist_a << ", k4 " << cmp.dist_b);
    CHECK(cmp.dist_b < cmp.dist_a);
}
