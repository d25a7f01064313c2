#pragma once

// Exact first-four cumulants of the von Neumann entropy S under the
// Hilbert-Schmidt ensemble, the cumulants of the induced entropy
// T = sum theta_i ln theta_i over the Wishart-Laguerre ensemble, and the
// rational-coefficient relation tying kappa_4 to kappa_1^T..kappa_4^T.
//
// Coefficient polynomials are evaluated with 128-bit integer numerators
// (they cancel catastrophically in naive double arithmetic at large n) and a
// single final division.

#include <array>
#include <cmath>
#include <cstdint>

#include "qent/specfun.hpp"

namespace qent {

struct SystemDims {
    int m = 1;  // smaller subsystem dimension
    int n = 1;  // larger subsystem dimension

    SystemDims() = default;
    SystemDims(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < m) throw domain_error("SystemDims: need 1 <= m <= n");
    }
    std::int64_t mn() const { return static_cast<std::int64_t>(m) * n; }
};

struct CumulantSet {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0;
};

struct MomentSet {
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

struct CoefficientSet {
    double a1, a2, a3;
    double b1, b2, b3;
    double c1, c2, c3, c4;
    double d1, d2, d3, d4, d5, d6;
};

namespace detail {

using i128 = __int128;

struct DimPowers {
    i128 m[7], n[7];
    explicit DimPowers(SystemDims d) {
        m[0] = n[0] = 1;
        for (int i = 1; i <= 6; ++i) {
            m[i] = m[i - 1] * d.m;
            n[i] = n[i - 1] * d.n;
        }
    }
    // coef * m^i * n^j
    i128 t(std::int64_t coef, int i, int j) const { return i128(coef) * m[i] * n[j]; }
};

inline double to_double(i128 v) {
    bool neg = v < 0;
    if (neg) v = -v;
    double r = 0.0;
    // peel 32-bit limbs
    double scale = 1.0;
    while (v > 0) {
        r += scale * static_cast<double>(static_cast<std::uint64_t>(v & 0xffffffffu));
        v >>= 32;
        scale *= 4294967296.0;
    }
    return neg ? -r : r;
}

}  // namespace detail

/// Table-1 coefficients of the first four cumulants as exact rationals in
/// (m, n), numerators in 128-bit integers.
inline CoefficientSet hs_coefficients(SystemDims d) {
    using detail::DimPowers;
    using detail::to_double;
    const DimPowers p(d);
    const double m = d.m, n = d.n;
    const double mn1 = m * n + 1.0, mn2 = m * n + 2.0, mn3 = m * n + 3.0;

    CoefficientSet c{};
    c.a1 = 1.0;
    c.a2 = -1.0;
    c.a3 = -(m + 1.0) / (2.0 * n);

    c.b1 = -1.0;
    c.b2 = (m + n) / mn1;
    c.b3 = -(m + 1.0) * (m + 2.0 * n + 1.0) / (4.0 * n * n * mn1);

    c.c1 = 1.0;
    c.c2 = -(m * m + 3.0 * m * n + n * n + 1.0) / (mn1 * mn2);
    c.c3 = (m * m - 1.0) * (m * n - 3.0 * n * n + 1.0) / (n * mn1 * mn1 * mn2);
    {
        detail::i128 num = p.t(3, 2, 2) + p.t(2, 3, 1) + p.t(4, 2, 1) + p.t(2, 2, 0) +
                           p.t(4, 1, 3) + p.t(3, 1, 2) + p.t(8, 1, 1) + p.t(4, 1, 0) +
                           p.t(10, 0, 2) + p.t(6, 0, 1) + p.t(2, 0, 0);
        c.c4 = -(m + 1.0) * to_double(num) / (4.0 * n * n * n * mn1 * mn1 * mn2);
    }

    c.d1 = -1.0;
    c.d2 = (m + n) * (m * m + 5.0 * m * n + n * n + 5.0) / (mn1 * mn2 * mn3);
    {
        detail::i128 num = p.t(6, 2, 3) + p.t(-3, 3, 2) + p.t(-9, 2, 1) + p.t(12, 1, 4) +
                           p.t(6, 1, 2) + p.t(-6, 1, 0) + p.t(20, 0, 3) + p.t(-8, 0, 1);
        c.d3 = (m - 1.0) * (m + 1.0) * to_double(num) /
               (n * mn1 * mn1 * mn2 * mn2 * mn3);
    }
    c.d4 = 6.0 * (m * m - 1.0) * (n * n - 1.0) / (mn1 * mn1 * mn2 * mn3);
    {
        detail::i128 num = p.t(3, 4, 3) + p.t(-9, 3, 4) + p.t(15, 3, 2) + p.t(-6, 2, 4) +
                           p.t(-21, 2, 3) + p.t(6, 2, 2) + p.t(24, 2, 1) + p.t(-36, 1, 4) +
                           p.t(-18, 1, 3) + p.t(-4, 1, 2) + p.t(18, 1, 1) + p.t(12, 1, 0) +
                           p.t(-60, 0, 3) + p.t(-12, 0, 2) + p.t(8, 0, 1) + p.t(12, 0, 0);
        c.d5 = (m * m - 1.0) * to_double(num) /
               (n * n * mn1 * mn1 * mn1 * mn2 * mn2 * mn3);
    }
    {
        detail::i128 num = p.t(15, 6, 3) + p.t(20, 5, 4) + p.t(45, 5, 3) + p.t(63, 5, 2) +
                           p.t(24, 4, 5) + p.t(40, 4, 4) + p.t(185, 4, 3) + p.t(189, 4, 2) +
                           p.t(24, 3, 6) + p.t(24, 3, 5) + p.t(200, 3, 4) + p.t(295, 3, 3) +
                           p.t(453, 3, 2) + p.t(192, 2, 5) + p.t(180, 2, 4) + p.t(560, 2, 3) +
                           p.t(591, 2, 2) + p.t(84, 4, 1) + p.t(252, 3, 1) + p.t(396, 2, 1) +
                           p.t(36, 3, 0) + p.t(108, 2, 0) + p.t(520, 1, 4) + p.t(420, 1, 3) +
                           p.t(576, 1, 2) + p.t(372, 1, 1) + p.t(108, 1, 0) + p.t(448, 0, 3) +
                           p.t(312, 0, 2) + p.t(144, 0, 1) + p.t(36, 0, 0);
        c.d6 = -(m + 1.0) * to_double(num) /
               (8.0 * n * n * n * n * mn1 * mn1 * mn1 * mn2 * mn2 * mn3);
    }
    return c;
}

/// First four cumulants of the von Neumann entropy. The near-cancelling
/// psi_3 pair is grouped first to preserve significant digits at large n.
inline CumulantSet hs_cumulants(SystemDims d) {
    const CoefficientSet c = hs_coefficients(d);
    const std::int64_t mn = d.mn();
    const double p0n = polygamma_int(0, d.n), p1n = polygamma_int(1, d.n);
    const double p2n = polygamma_int(2, d.n), p3n = polygamma_int(3, d.n);
    CumulantSet k;
    k.k1 = (c.a1 * polygamma_int(0, mn + 1) + c.a2 * p0n) + c.a3;
    k.k2 = (c.b1 * polygamma_int(1, mn + 1) + c.b2 * p1n) + c.b3;
    k.k3 = (c.c1 * polygamma_int(2, mn + 1) + c.c2 * p2n) + c.c3 * p1n + c.c4;
    k.k4 = (c.d1 * polygamma_int(3, mn + 1) + c.d2 * p3n) + c.d3 * p2n + c.d4 * p1n * p1n +
           c.d5 * p1n + c.d6;
    return k;
}

struct InducedCumulants {
    double k1T, k2T, k3T, k4T;
};

/// Closed-form cumulants of T over the Wishart-Laguerre ensemble.
inline InducedCumulants induced_cumulants(SystemDims d) {
    const double m = d.m, n = d.n;
    const double p0 = polygamma_int(0, d.n), p1 = polygamma_int(1, d.n);
    const double p2 = polygamma_int(2, d.n), p3 = polygamma_int(3, d.n);
    InducedCumulants r;
    r.k1T = m * n * p0 + 0.5 * m * (m + 1.0);
    r.k2T = m * n * (m + n) * p1 + m * n * p0 * p0 + m * (m + 2.0 * n + 1.0) * p0 +
            0.5 * m * (m + 1.0);
    r.k3T = m * n * (m * m + 3.0 * m * n + n * n + 1.0) * p2 +
            6.0 * m * n * (m + n) * p0 * p1 +
            m * (2.0 * m * m + 12.0 * m * n + 3.0 * m + 6.0 * n * n + 3.0 * n + 1.0) * p1 +
            2.0 * m * n * p0 * p0 * p0 + 3.0 * m * (m + 3.0 * n + 1.0) * p0 * p0 +
            6.0 * m * (m + n + 1.0) * p0 + m * (m + 1.0);
    r.k4T = m * n * (m + n) * (m * m + 5.0 * m * n + n * n + 5.0) * p3 +
            12.0 * m * n * (m * m + 3.0 * m * n + n * n + 1.0) * p0 * p2 +
            m * (3.0 * m * m * m + 36.0 * m * m * n + 6.0 * m * m + 54.0 * m * n * n +
                 18.0 * m * n + 9.0 * m + 12.0 * n * n * n + 6.0 * n * n + 26.0 * n + 6.0) *
                p2 +
            6.0 * m * n * (2.0 * m * m + 5.0 * m * n + 2.0 * n * n + 1.0) * p1 * p1 +
            36.0 * m * n * (m + n) * p0 * p0 * p1 +
            12.0 * m * (2.0 * m * m + 14.0 * m * n + 3.0 * m + 8.0 * n * n + 3.0 * n + 1.0) *
                p0 * p1 +
            18.0 * m *
                (2.0 * m * m + 6.0 * m * n + 3.0 * m + 2.0 * n * n + 2.0 * n + 1.0) * p1 +
            6.0 * m * n * p0 * p0 * p0 * p0 + 4.0 * m * (3.0 * m + 11.0 * n + 3.0) * p0 * p0 * p0 +
            24.0 * m * (2.0 * m + 3.0 * n + 2.0) * p0 * p0 +
            12.0 * m * (3.0 * m + 2.0 * n + 3.0) * p0 + 3.0 * m * (m + 1.0);
    return r;
}

/// E_h[r^4 ln^l r] for r ~ Gamma(mn), l = 0..4; the l-th derivative of
/// Gamma(a) at a = mn+4 over Gamma(mn), i.e. (mn)_4 times a psi polynomial.
inline double r_log_moments(SystemDims d, int log_power) {
    if (log_power < 0 || log_power > 4)
        throw domain_error("r_log_moments: log_power must be in 0..4");
    const std::int64_t mn = d.mn();
    const double poch = static_cast<double>(mn) * (mn + 1.0) * (mn + 2.0) * (mn + 3.0);
    const double g0 = polygamma_int(0, mn + 4), g1 = polygamma_int(1, mn + 4);
    const double g2 = polygamma_int(2, mn + 4), g3 = polygamma_int(3, mn + 4);
    switch (log_power) {
        case 0: return poch;
        case 1: return poch * g0;
        case 2: return poch * (g0 * g0 + g1);
        case 3: return poch * (g0 * g0 * g0 + 3.0 * g0 * g1 + g2);
        default:
            return poch * (g0 * g0 * g0 * g0 + 6.0 * g0 * g0 * g1 + 4.0 * g0 * g2 +
                           3.0 * g1 * g1 + g3);
    }
}

/// kappa_4 of S assembled from the induced cumulants through the full
/// rational-coefficient relation, trailing -psi_3(mn+1) included.
inline double kappa4_via_relation(SystemDims d) {
    const InducedCumulants t = induced_cumulants(d);
    const double mn = static_cast<double>(d.mn());
    const double mn1 = mn + 1.0, mn2 = mn + 2.0, mn3 = mn + 3.0;
    const double poch = mn * mn1 * mn2 * mn3;
    const double k1 = t.k1T, k2 = t.k2T, k3 = t.k3T, k4 = t.k4T;
    double inner = k4;
    inner -= 12.0 * k1 * k3 / mn;
    inner -= 4.0 * (3.0 * mn * mn + 12.0 * mn + 11.0) * k3 / (mn1 * mn2);
    inner -= 6.0 * (2.0 * mn + 3.0) * k2 * k2 / (mn * mn1);
    inner += 12.0 * (5.0 * mn + 6.0) * k1 * k1 * k2 / (mn * mn * mn1);
    inner += 24.0 * (2.0 * mn + 3.0) * (2.0 * mn + 5.0) * k1 * k2 / (mn * mn1 * mn2);
    inner += 12.0 * mn3 * (3.0 * mn * mn + 9.0 * mn + 7.0) * k2 / (mn1 * mn1 * mn2);
    inner -= 6.0 * (5.0 * mn + 6.0) * k1 * k1 * k1 * k1 / (mn * mn * mn * mn1);
    inner -= 8.0 * (2.0 * mn + 3.0) * (5.0 * mn + 12.0) * k1 * k1 * k1 / (mn * mn * mn1 * mn2);
    inner -= 12.0 * mn3 * (2.0 * mn + 3.0) * (3.0 * mn + 4.0) * k1 * k1 / (mn * mn1 * mn1 * mn2);
    inner -= 24.0 * mn2 * mn3 * k1 / (mn1 * mn1);
    return inner / poch - polygamma_int(3, d.mn() + 1);
}

/// Moments from cumulants; note m4 uses 3 kappa_2^2 (the inverse map and the
/// round-trip force it).
inline MomentSet moments_from_cumulants(const CumulantSet& k) {
    MomentSet m;
    m.m1 = k.k1;
    m.m2 = k.k2 + k.k1 * k.k1;
    m.m3 = k.k3 + 3.0 * k.k2 * k.k1 + k.k1 * k.k1 * k.k1;
    m.m4 = k.k4 + 4.0 * k.k3 * k.k1 + 3.0 * k.k2 * k.k2 + 6.0 * k.k2 * k.k1 * k.k1 +
           k.k1 * k.k1 * k.k1 * k.k1;
    return m;
}

inline CumulantSet cumulants_from_moments(const MomentSet& m) {
    CumulantSet k;
    k.k1 = m.m1;
    k.k2 = m.m2 - m.m1 * m.m1;
    k.k3 = m.m3 - 3.0 * m.m2 * m.m1 + 2.0 * m.m1 * m.m1 * m.m1;
    k.k4 = m.m4 - 4.0 * m.m3 * m.m1 - 3.0 * m.m2 * m.m2 + 12.0 * m.m2 * m.m1 * m.m1 -
           6.0 * m.m1 * m.m1 * m.m1 * m.m1;
    return k;
}

inline double skewness(SystemDims d) {
    if (d.m < 2) throw domain_error("skewness: distribution is degenerate for m = 1");
    CumulantSet k = hs_cumulants(d);
    return k.k3 / std::pow(k.k2, 1.5);
}

inline double kurtosis(SystemDims d) {
    if (d.m < 2) throw domain_error("kurtosis: distribution is degenerate for m = 1");
    CumulantSet k = hs_cumulants(d);
    return k.k4 / (k.k2 * k.k2);
}

}  // namespace qent
