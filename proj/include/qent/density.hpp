#pragma once

// Density approximations for the standardized entropy X = (S - k1)/sqrt(k2):
// the Gaussian baseline and the Gram-Charlier refinements with the kappa_3
// and kappa_4 Hermite correction terms. Gram-Charlier values can go negative
// far in the tails; they are reported as-is.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qent/cumulants.hpp"
#include "qent/ensemble.hpp"
#include "qent/specfun.hpp"

namespace qent {

enum class DensityOrder { gaussian, k3, k4 };

inline double standardize(double s, const CumulantSet& k) {
    if (!(k.k2 > 0.0)) throw domain_error("standardize: degenerate distribution, k2 <= 0");
    return (s - k.k1) / std::sqrt(k.k2);
}

/// Approximate density of X at x:
///   phi(x) (1 + gamma1/6 He3(x) + gamma2/24 He4(x))
/// truncated after the chosen correction term.
inline double gram_charlier_pdf(double x, const CumulantSet& k, DensityOrder order) {
    if (!(k.k2 > 0.0)) throw domain_error("gram_charlier_pdf: degenerate distribution");
    const double phi = 0.39894228040143267793994605993438 * std::exp(-0.5 * x * x);
    if (order == DensityOrder::gaussian) return phi;
    const double gamma1 = k.k3 / std::pow(k.k2, 1.5);
    double corr = 1.0 + gamma1 / 6.0 * hermite_he(3, x);
    if (order == DensityOrder::k4) {
        const double gamma2 = k.k4 / (k.k2 * k.k2);
        corr += gamma2 / 24.0 * hermite_he(4, x);
    }
    return phi * corr;
}

struct Histogram {
    std::vector<double> edges;   // strictly increasing, size = bins + 1
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;      // includes draws outside the edge range

    int bins() const { return static_cast<int>(counts.size()); }
    double center(int b) const { return 0.5 * (edges[b] + edges[b + 1]); }
    double width(int b) const { return edges[b + 1] - edges[b]; }
    /// empirical density of bin b (count / (total * width))
    double density(int b) const {
        return total > 0 ? counts[b] / (static_cast<double>(total) * width(b)) : 0.0;
    }
};

/// Histogram range for tail comparisons at the given dimensions: bin width
/// 0.05 on [-6, x_max + 0.25] where x_max = (ln m - k1)/sqrt(k2) is the upper
/// support edge of the standardized entropy. Clipping the histogram below
/// x_max would hide the region where the k3-only curve turns negative.
inline std::pair<double, double> standardized_range(SystemDims dims) {
    CumulantSet k = hs_cumulants(dims);
    double x_max = (std::log(static_cast<double>(dims.m)) - k.k1) / std::sqrt(k.k2);
    return {-6.0, std::min(6.0, x_max + 0.25)};
}

inline Histogram make_histogram(double lo, double hi, int bins) {
    if (!(hi > lo) || bins < 1) throw domain_error("make_histogram: bad range");
    Histogram h;
    h.edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i)
        h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / bins;
    h.counts.assign(bins, 0);
    return h;
}

inline void histogram_add(Histogram& h, double x) {
    h.total += 1;
    if (x < h.edges.front() || x >= h.edges.back()) return;
    auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
    int b = static_cast<int>(it - h.edges.begin()) - 1;
    if (b >= 0 && b < h.bins()) h.counts[b] += 1;
}

inline void histogram_merge(Histogram& h, const Histogram& other) {
    if (h.edges != other.edges) throw domain_error("histogram_merge: incompatible edges");
    h.total += other.total;
    for (int b = 0; b < h.bins(); ++b) h.counts[b] += other.counts[b];
}

/// L1 distance between the empirical tail (|center| > cut) and a density
/// approximation evaluated at bin centers: sum |emp - approx| * width.
template <typename Pdf>
double tail_distance(const Histogram& h, const Pdf& approx, double cut) {
    double dist = 0.0;
    for (int b = 0; b < h.bins(); ++b) {
        double c = h.center(b);
        if (std::abs(c) <= cut) continue;
        dist += std::abs(h.density(b) - approx(c)) * h.width(b);
    }
    return dist;
}

struct TailComparison {
    double dist_a, dist_b;
};

template <typename PdfA, typename PdfB>
TailComparison tail_compare(const Histogram& h, const PdfA& a, const PdfB& b, double cut) {
    return {tail_distance(h, a, cut), tail_distance(h, b, cut)};
}

/// Fills `hist` with `total` standardized entropy draws, partitioned over the
/// configured RNG streams and merged in stream order (thread-count
/// independent, like run_streams).
inline void sample_standardized_histogram(SystemDims dims, const CumulantSet& k,
                                          std::int64_t total, RngConfig cfg, int threads,
                                          Histogram& hist) {
    const int ns = cfg.streams;
    Histogram blank = hist;
    std::fill(blank.counts.begin(), blank.counts.end(), std::int64_t{0});
    blank.total = 0;
    std::vector<Histogram> parts(ns, blank);
    std::vector<std::int64_t> quota(ns, total / ns);
    for (std::int64_t i = 0; i < total % ns; ++i) quota[static_cast<std::size_t>(i)] += 1;
    threads = std::max(1, threads);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int sidx = next.fetch_add(1);
            if (sidx >= ns) return;
            RngStream rng(cfg.seed, static_cast<std::uint64_t>(sidx));
            for (std::int64_t i = 0; i < quota[sidx]; ++i) {
                EigenSample s = sample_wishart_eigenvalues(dims, rng);
                histogram_add(parts[sidx], standardize(entropy_from_sample(s).S, k));
            }
        }
    };
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& p : parts) histogram_merge(hist, p);
}

}  // namespace qent
