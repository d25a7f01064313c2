#pragma once

// Polygamma functions, factorial helpers and the probabilist's Hermite
// polynomials. All closed-form entropy cumulants reduce to psi_j at integer
// arguments, so an exact finite-sum evaluator with a shared prefix-sum cache
// is the workhorse here; a real-argument evaluator (recurrence + Bernoulli
// asymptotics) backs the identity grids and the kernel integrals, which need
// psi_j at arguments like k + 0.5.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qent {

// Mathematical constants to full double precision.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double zeta2 = 1.64493406684822643647241516664602519;  // pi^2/6
inline constexpr double zeta3 = 1.20205690315959428539973816151144999;  // Apery
inline constexpr double zeta4 = 1.08232323371113819151600369654116790;  // pi^4/90
inline constexpr double pi4_over_15 = 6.49393940226682914909602217924700742;

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// psi_0 uses the growing harmonic prefix; psi_1..psi_3 shrink toward zero, so
// their finite-sum forms are accumulated as tails sum_{k>=l} 1/k^p instead
// (the algebraically identical direction that has no cancellation), anchored
// by an Euler-Maclaurin estimate above the table.
struct PolyGammaTable {
    std::vector<double> h1;              // h1[l] = sum_{k=1}^{l} 1/k, h1[0] = 0
    std::vector<double> t2, t3, t4;      // tp[l] = sum_{k=l}^{inf} 1/k^p, 1-based
};

// sum_{k=M}^{inf} k^{-p} by Euler-Maclaurin; M >= 32 gives ~1e-16 relative
inline double zeta_tail(int p, double mm) {
    double head = std::pow(mm, 1.0 - p) / (p - 1.0) + 0.5 * std::pow(mm, -p);
    double c1 = p / 12.0 * std::pow(mm, -p - 1.0);
    double c2 = -p * (p + 1.0) * (p + 2.0) / 720.0 * std::pow(mm, -p - 3.0);
    double c3 = p * (p + 1.0) * (p + 2.0) * (p + 3.0) * (p + 4.0) / 30240.0 *
                std::pow(mm, -p - 5.0);
    return head + c1 + c2 + c3;
}

inline std::shared_ptr<const PolyGammaTable> build_polygamma_table(std::int64_t max_arg) {
    auto t = std::make_shared<PolyGammaTable>();
    const std::int64_t size = std::max<std::int64_t>(max_arg, 32);
    t->h1.resize(size + 1);
    t->h1[0] = 0.0;
    double sum = 0.0, comp = 0.0;
    for (std::int64_t k = 1; k <= size; ++k) {
        double y = 1.0 / static_cast<double>(k) - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        t->h1[k] = sum;
    }
    auto backward = [size](std::vector<double>& tp, int p) {
        tp.resize(size + 2);
        double tail = zeta_tail(p, static_cast<double>(size + 1));
        double tcomp = 0.0;
        tp[size + 1] = tail;
        for (std::int64_t k = size; k >= 1; --k) {
            double y = std::pow(static_cast<double>(k), -p) - tcomp;
            double s = tail + y;
            tcomp = (s - tail) - y;
            tail = s;
            tp[k] = tail;
        }
    };
    backward(t->t2, 2);
    backward(t->t3, 3);
    backward(t->t4, 4);
    return t;
}

// Copy-on-grow cache: readers take a snapshot, growth republishes.
inline std::shared_ptr<const PolyGammaTable> polygamma_cache(std::int64_t need) {
    static std::mutex mu;
    static std::shared_ptr<const PolyGammaTable> table;
    {
        std::shared_ptr<const PolyGammaTable> snap = std::atomic_load(&table);
        if (snap && static_cast<std::int64_t>(snap->h1.size()) > need) return snap;
    }
    std::lock_guard<std::mutex> lock(mu);
    std::shared_ptr<const PolyGammaTable> snap = std::atomic_load(&table);
    if (!snap || static_cast<std::int64_t>(snap->h1.size()) <= need) {
        std::int64_t target = std::max<std::int64_t>(need + 1, 64);
        // rebuild geometrically larger; the tails are anchored at the top, so
        // growth means a fresh backward pass
        if (snap) target = std::max<std::int64_t>(target, 2 * static_cast<std::int64_t>(snap->h1.size()));
        snap = build_polygamma_table(target);
        std::atomic_store(&table, snap);
    }
    return snap;
}

}  // namespace detail

/// psi_j(l) for j in 0..3 and positive integer l, by the finite-sum forms
///   psi_0(l) = -gamma + H_{l-1},  psi_1(l) = pi^2/6 - H^{(2)}_{l-1},
///   psi_2(l) = -2 zeta(3) + 2 H^{(3)}_{l-1},  psi_3(l) = pi^4/15 - 6 H^{(4)}_{l-1}.
inline double polygamma_int(int order, std::int64_t arg) {
    if (arg < 1) throw domain_error("polygamma_int: argument must be a positive integer");
    if (order < 0 || order > 3) throw domain_error("polygamma_int: order must be in 0..3");
    auto t = detail::polygamma_cache(arg);
    switch (order) {
        case 0: return -euler_gamma + t->h1[arg - 1];
        case 1: return t->t2[arg];          // pi^2/6 - H^(2)_{l-1}
        case 2: return -2.0 * t->t3[arg];   // -2 zeta(3) + 2 H^(3)_{l-1}
        default: return 6.0 * t->t4[arg];   // pi^4/15 - 6 H^(4)_{l-1}
    }
}

/// Pre-builds the psi_j cache; call before sharing across threads.
inline void warm_polygamma_cache(std::int64_t max_arg) { detail::polygamma_cache(max_arg); }

namespace detail {

// B_2 .. B_20
inline constexpr double bernoulli2k[10] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0};

}  // namespace detail

/// psi_j(x) for real x > 0, any order j >= 0 (used up to j ~ 7 by the
/// epsilon-series machinery). Recurrence lifts x above 26, then the Bernoulli
/// asymptotic series finishes the job.
inline double polygamma_real(int order, double x) {
    if (!(x > 0.0)) throw domain_error("polygamma_real: argument must be positive");
    if (order < 0) throw domain_error("polygamma_real: negative order");
    if (order <= 3 && x == std::floor(x) && x < 1e6) {
        return polygamma_int(order, static_cast<std::int64_t>(x));
    }
    const int j = order;
    double fact_j = 1.0;
    for (int i = 2; i <= j; ++i) fact_j *= i;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^j
    double acc = 0.0;
    while (x < 26.0) {
        // psi_j(x) = psi_j(x+1) - (-1)^j j! / x^{j+1}
        acc -= sign * fact_j * std::pow(x, -(j + 1));
        x += 1.0;
    }
    double result;
    if (j == 0) {
        result = std::log(x) - 0.5 / x;
        double x2 = 1.0 / (x * x), p = x2;
        for (int i = 0; i < 10; ++i) {
            result -= detail::bernoulli2k[i] / (2.0 * (i + 1)) * p;
            p *= x2;
        }
    } else {
        // (-1)^{j-1} psi_j(x) = (j-1)!/x^j + j!/(2 x^{j+1})
        //                        + sum_i B_{2i} (2i+j-1)! / ((2i)! x^{2i+j})
        double s = fact_j / j * std::pow(x, -j) + 0.5 * fact_j * std::pow(x, -(j + 1));
        double x2 = 1.0 / (x * x);
        double pw = std::pow(x, -j);
        double rising = fact_j / j;  // (2i+j-1)!/(2i)! at i=0 is (j-1)!
        for (int i = 1; i <= 10; ++i) {
            rising *= static_cast<double>(2 * i + j - 2) * static_cast<double>(2 * i + j - 1) /
                      (static_cast<double>(2 * i - 1) * static_cast<double>(2 * i));
            pw *= x2;
            s += detail::bernoulli2k[i - 1] * rising * pw;
        }
        result = -sign * s;
    }
    return result + acc;
}

/// ln(n!) with n >= 0; exact 0 for n in {0, 1}.
inline double log_factorial(std::int64_t n) {
    if (n < 0) throw domain_error("log_factorial: negative argument");
    if (n < 2) return 0.0;
    if (n <= 20) {
        double p = 1.0;
        for (std::int64_t k = 2; k <= n; ++k) p *= static_cast<double>(k);
        return std::log(p);
    }
    return std::lgamma(static_cast<double>(n) + 1.0);
}

/// n! as a double; exact for n <= 22, overflows past 170.
inline double factorial(std::int64_t n) {
    if (n < 0) throw domain_error("factorial: negative argument");
    if (n > 170) throw numeric_error("factorial: double overflow");
    double p = 1.0;
    for (std::int64_t k = 2; k <= n; ++k) p *= static_cast<double>(k);
    return p;
}

/// Gamma(x+1)/Gamma(y+1) for x, y > -1, in log space with an exact integer
/// fast path for small arguments.
inline double factorial_ratio(double x, double y) {
    if (x == y) return 1.0;
    bool ints = x == std::floor(x) && y == std::floor(y) && x >= 0.0 && y >= 0.0;
    if (ints && x <= 170.0 && y <= 170.0 && std::abs(x - y) <= 64.0) {
        double p = 1.0;
        if (x > y) {
            for (double v = y + 1.0; v <= x + 0.5; v += 1.0) p *= v;
            return p;
        }
        for (double v = x + 1.0; v <= y + 0.5; v += 1.0) p *= v;
        return 1.0 / p;
    }
    return std::exp(std::lgamma(x + 1.0) - std::lgamma(y + 1.0));
}

/// Probabilist's Hermite polynomials He_3 and He_4.
inline double hermite_he(int degree, double x) {
    switch (degree) {
        case 3: return x * (x * x - 3.0);
        case 4: return (x * x) * (x * x - 6.0) + 3.0;
        default: throw domain_error("hermite_he: only degrees 3 and 4 are supported");
    }
}

}  // namespace qent
