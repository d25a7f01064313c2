#pragma once

// Monte Carlo side of the artifact: Wishart-Laguerre eigenvalue sampling, the
// fixed-trace (Hilbert-Schmidt) entropy draws obtained by trace
// normalization, streaming power sums with unbiased k-statistics, and the
// one-dimensional quadrature oracle for m = 2.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "qent/cumulants.hpp"
#include "qent/quadrature.hpp"
#include "qent/rng.hpp"
#include "qent/specfun.hpp"

namespace qent {

/// Real eigenvalues of a complex Hermitian matrix (row-major m x m), ascending,
/// by cyclic Jacobi rotations. Off-diagonal norm threshold 1e-13 * ||A||_F,
/// 30-sweep cap.
inline std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int m) {
    using cd = std::complex<double>;
    auto at = [&](int i, int j) -> cd& { return a[static_cast<std::size_t>(i) * m + j]; };
    double norm = 0.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) norm += std::norm(at(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > 1e-12 * std::max(1.0, norm))
                throw domain_error("hermitian_eigenvalues: input is not Hermitian");
        }
    const double stop = 1e-13 * std::max(norm, 1e-300);
    for (int sweep = 0; sweep < 30; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) off += 2.0 * std::norm(at(i, j));
        if (std::sqrt(off) <= stop) break;
        if (sweep == 29) throw numeric_error("hermitian_eigenvalues: Jacobi did not converge");
        for (int p = 0; p < m - 1; ++p) {
            for (int q = p + 1; q < m; ++q) {
                cd apq = at(p, q);
                double abs_apq = std::abs(apq);
                if (abs_apq == 0.0) continue;
                double app = at(p, p).real(), aqq = at(q, q).real();
                double theta = 0.5 * std::atan2(2.0 * abs_apq, app - aqq);
                double c = std::cos(theta), s_mag = std::sin(theta);
                cd phase = apq / abs_apq;
                cd s = s_mag * phase;
                for (int k = 0; k < m; ++k) {
                    cd akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp + std::conj(s) * akq;
                    at(k, q) = -s * akp + c * akq;
                }
                for (int k = 0; k < m; ++k) {
                    cd apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk + s * aqk;
                    at(q, k) = -std::conj(s) * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(m);
    for (int i = 0; i < m; ++i) ev[i] = at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

struct EigenSample {
    std::vector<double> theta;   // Wishart eigenvalues, ascending
    double r = 0.0;              // trace
    std::vector<double> lambda;  // theta / r, the Schmidt coefficients
};

/// Draws X (m x n, i.i.d. standard complex Gaussian entries with unit total
/// variance), forms W = X X^dagger and returns its eigenvalues plus the
/// trace-normalized fixed-trace spectrum.
inline EigenSample sample_wishart_eigenvalues(SystemDims dims, RngStream& rng) {
    using cd = std::complex<double>;
    const int m = dims.m, n = dims.n;
    const double root_half = 0.70710678118654752440084436210485;
    std::vector<cd> x(static_cast<std::size_t>(m) * n);
    for (auto& e : x) e = cd(root_half * rng.next_normal(), root_half * rng.next_normal());
    std::vector<cd> w(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            cd s = 0.0;
            const cd* xi = &x[static_cast<std::size_t>(i) * n];
            const cd* xj = &x[static_cast<std::size_t>(j) * n];
            for (int k = 0; k < n; ++k) s += xi[k] * std::conj(xj[k]);
            w[static_cast<std::size_t>(i) * m + j] = s;
            w[static_cast<std::size_t>(j) * m + i] = std::conj(s);
        }
    }
    EigenSample out;
    out.theta = hermitian_eigenvalues(std::move(w), m);
    double r = 0.0;
    for (double t : out.theta) r += t;
    out.r = r;
    out.lambda.resize(m);
    for (int i = 0; i < m; ++i) out.lambda[i] = out.theta[i] / r;
    return out;
}

struct EntropyDraw {
    double S = 0.0;  // von Neumann entropy of lambda, in [0, ln m]
    double T = 0.0;  // induced entropy sum theta ln theta
};

inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

inline EntropyDraw entropy_from_sample(const EigenSample& sample) {
    EntropyDraw d;
    for (double lam : sample.lambda) d.S -= xlogx(lam);
    for (double th : sample.theta) d.T += xlogx(th);
    return d;
}

/// Single-pass power-sum accumulator (Kahan-compensated); merging is
/// associative, so per-stream accumulators can be folded in any order.
class StreamingStats {
  public:
    void add(double x) {
        count_ += 1;
        double p = x;
        for (int i = 0; i < 4; ++i) {
            add_compensated(sum_[i], comp_[i], p);
            p *= x;
        }
    }

    void merge(const StreamingStats& other) {
        count_ += other.count_;
        for (int i = 0; i < 4; ++i) {
            add_compensated(sum_[i], comp_[i], other.sum_[i]);
            add_compensated(sum_[i], comp_[i], other.comp_[i]);
        }
    }

    std::int64_t count() const { return count_; }
    double power_sum(int p) const { return sum_[p - 1] + comp_[p - 1]; }

    /// Fisher k-statistics: unbiased estimators of kappa_1..kappa_4.
    CumulantSet k_statistics() const {
        const double n = static_cast<double>(count_);
        if (count_ < 4) throw domain_error("k_statistics: need at least 4 samples");
        const double p1 = power_sum(1), p2 = power_sum(2), p3 = power_sum(3), p4 = power_sum(4);
        CumulantSet k;
        k.k1 = p1 / n;
        k.k2 = (n * p2 - p1 * p1) / (n * (n - 1.0));
        k.k3 = (2.0 * p1 * p1 * p1 - 3.0 * n * p1 * p2 + n * n * p3) /
               (n * (n - 1.0) * (n - 2.0));
        k.k4 = (-6.0 * p1 * p1 * p1 * p1 + 12.0 * n * p1 * p1 * p2 -
                3.0 * n * (n - 1.0) * p2 * p2 - 4.0 * n * (n + 1.0) * p1 * p3 +
                n * n * (n + 1.0) * p4) /
               (n * (n - 1.0) * (n - 2.0) * (n - 3.0));
        return k;
    }

  private:
    static void add_compensated(double& sum, double& comp, double value) {
        double y = value - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    std::int64_t count_ = 0;
    double sum_[4] = {0, 0, 0, 0};
    double comp_[4] = {0, 0, 0, 0};
};

struct McEstimate {
    CumulantSet k;
    std::array<double, 4> se{};  // batch-means standard errors for k1..k4
    std::int64_t samples = 0;
};

/// Pools per-batch accumulators into global k-statistics with batch-means
/// standard errors (each stream is one batch; streams >= 30 expected).
inline McEstimate pool_batches(const std::vector<StreamingStats>& batches) {
    StreamingStats all;
    for (const auto& b : batches) all.merge(b);
    McEstimate est;
    est.k = all.k_statistics();
    est.samples = all.count();
    const int nb = static_cast<int>(batches.size());
    std::array<double, 4> mean{}, var{};
    std::vector<std::array<double, 4>> per(nb);
    for (int b = 0; b < nb; ++b) {
        CumulantSet kb = batches[b].k_statistics();
        per[b] = {kb.k1, kb.k2, kb.k3, kb.k4};
        for (int i = 0; i < 4; ++i) mean[i] += per[b][i];
    }
    for (int i = 0; i < 4; ++i) mean[i] /= nb;
    for (int b = 0; b < nb; ++b)
        for (int i = 0; i < 4; ++i) {
            double d = per[b][i] - mean[i];
            var[i] += d * d;
        }
    for (int i = 0; i < 4; ++i)
        est.se[i] = std::sqrt(var[i] / (nb - 1.0) / nb);
    return est;
}

/// Samples `total` entropy draws of the given kind deterministically across
/// `threads` workers: work is partitioned by RNG stream, then folded in
/// stream order. `extract` maps an EigenSample to the accumulated statistic.
inline std::vector<StreamingStats> run_streams(
    SystemDims dims, std::int64_t total, RngConfig cfg, int threads,
    const std::function<double(const EigenSample&)>& extract) {
    const int ns = cfg.streams;
    if (ns < 1) throw domain_error("run_streams: need at least one stream");
    std::vector<StreamingStats> per_stream(ns);
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
            StreamingStats stats;
            for (std::int64_t i = 0; i < quota[sidx]; ++i) {
                EigenSample s = sample_wishart_eigenvalues(dims, rng);
                stats.add(extract(s));
            }
            per_stream[sidx] = stats;
        }
    };
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return per_stream;
}

/// Monte Carlo k-statistics of the von Neumann entropy.
inline McEstimate mc_entropy_cumulants(SystemDims dims, std::int64_t samples, RngConfig cfg,
                                       int threads) {
    auto batches = run_streams(dims, samples, cfg, threads, [](const EigenSample& s) {
        return entropy_from_sample(s).S;
    });
    return pool_batches(batches);
}

/// m = 2 reduces the fixed-trace density to one dimension,
/// p(lambda) ~ (2 lambda - 1)^2 (lambda(1-lambda))^{n-2} on [0,1]; the first
/// four entropy moments follow by adaptive quadrature and convert to
/// cumulants. Independent of every closed form above.
inline CumulantSet m2_oracle_cumulants(int n, double tol = 1e-13) {
    if (n < 2) throw domain_error("m2_oracle_cumulants: need n >= 2");
    auto weight = [n](double lam) {
        double u = 2.0 * lam - 1.0;
        return u * u * std::pow(lam * (1.0 - lam), static_cast<double>(n - 2));
    };
    auto entropy = [](double lam) { return -xlogx(lam) - xlogx(1.0 - lam); };
    const double z = integrate(weight, 0.0, 1.0, tol);
    // moments are integrated against the normalized density so the absolute
    // quadrature tolerance applies to E[S^p] itself
    auto moment = [&](int p) {
        return integrate(
            [&](double lam) {
                double s = entropy(lam);
                double sp = 1.0;
                for (int i = 0; i < p; ++i) sp *= s;
                return sp * weight(lam) / z;
            },
            0.0, 1.0, tol);
    };
    MomentSet mom;
    mom.m1 = moment(1);
    mom.m2 = moment(2);
    mom.m3 = moment(3);
    mom.m4 = moment(4);
    return cumulants_from_moments(mom);
}

}  // namespace qent
