#pragma once

// Truncated Laurent series in a formal perturbation eps, used to resolve the
// 0 * inf products that appear when gamma and polygamma factors are evaluated
// at non-positive integers. A series carries its exact leading exponent plus
// five coefficients; that window is enough because at most four logarithmic
// derivatives are ever taken and every full product is analytic.

#include <array>
#include <cmath>
#include <cstdint>

#include "qent/specfun.hpp"

namespace qent {

struct EpsSeries {
    static constexpr int window = 5;
    int lead = 0;                        // exponent of the first stored coefficient
    std::array<double, window> c{};      // coefficients of eps^{lead+i}

    static EpsSeries constant(double v) {
        EpsSeries s;
        s.c[0] = v;
        return s;
    }
    /// v + eps
    static EpsSeries linear(double v) {
        EpsSeries s;
        s.c[0] = v;
        s.c[1] = 1.0;
        return s;
    }
    /// coefficient of eps^k, zero outside the stored window
    double coeff(int k) const {
        int i = k - lead;
        return (i >= 0 && i < window) ? c[i] : 0.0;
    }
};

inline EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
    EpsSeries r;
    r.lead = a.lead + b.lead;
    for (int i = 0; i < EpsSeries::window; ++i) {
        double s = 0.0;
        for (int j = 0; j <= i; ++j) s += a.c[j] * b.c[i - j];
        r.c[i] = s;
    }
    return r;
}

inline EpsSeries operator*(double v, const EpsSeries& a) {
    EpsSeries r = a;
    for (auto& x : r.c) x *= v;
    return r;
}

inline EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
    const EpsSeries& lo = (a.lead <= b.lead) ? a : b;
    const EpsSeries& hi = (a.lead <= b.lead) ? b : a;
    EpsSeries r;
    r.lead = lo.lead;
    for (int i = 0; i < EpsSeries::window; ++i) {
        int k = lo.lead + i;
        r.c[i] = lo.c[i] + hi.coeff(k);
    }
    return r;
}

inline EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) { return a + (-1.0 * b); }

/// Reciprocal; the stored leading coefficient must be nonzero.
inline EpsSeries inverse(const EpsSeries& a) {
    EpsSeries r;
    r.lead = -a.lead;
    const double a0 = a.c[0];
    r.c[0] = 1.0 / a0;
    for (int i = 1; i < EpsSeries::window; ++i) {
        double s = 0.0;
        for (int j = 1; j <= i; ++j) s += a.c[j] * r.c[i - j];
        r.c[i] = -s / a0;
    }
    return r;
}

inline EpsSeries operator/(const EpsSeries& a, const EpsSeries& b) { return a * inverse(b); }

namespace detail {

inline bool near_nonpositive_integer(double z, std::int64_t& l) {
    double r = std::round(z);
    if (r > 0.5 || std::abs(z - r) > 1e-9) return false;
    l = static_cast<std::int64_t>(-r);
    return true;
}

// exp of a series with zero constant term
inline EpsSeries exp_series(const std::array<double, EpsSeries::window>& a) {
    EpsSeries r = EpsSeries::constant(1.0);
    // r' = a' r, solved coefficient by coefficient
    for (int i = 1; i < EpsSeries::window; ++i) {
        double s = 0.0;
        for (int j = 1; j <= i; ++j) s += j * a[j] * r.c[i - j];
        r.c[i] = s / i;
    }
    return r;
}

// Gamma(z+eps) for z >= 0.5 via Gamma(z) exp(sum psi_{j-1}(z) eps^j / j!)
inline EpsSeries gamma_eps_positive(double z) {
    std::array<double, EpsSeries::window> a{};
    double fact = 1.0;
    for (int j = 1; j < EpsSeries::window; ++j) {
        fact *= j;
        a[j] = polygamma_real(j - 1, z) / fact;
    }
    return std::tgamma(z) * exp_series(a);
}

// polynomial prod_{i} (z_i + eps) given the roots' constant parts
inline EpsSeries poly_from_shifts(const double* shifts, int count) {
    EpsSeries p = EpsSeries::constant(1.0);
    for (int i = 0; i < count; ++i) p = p * EpsSeries::linear(shifts[i]);
    return p;
}

}  // namespace detail

/// Laurent expansion of Gamma(z + eps) around any real z > -1e6. Non-positive
/// integer z yields the familiar simple pole (-1)^l / (l! eps) (1 + ...);
/// other arguments are analytic.
inline EpsSeries gamma_eps(double z) {
    std::int64_t l = 0;
    if (detail::near_nonpositive_integer(z, l)) {
        // Gamma(-l+eps) = Gamma(1+eps) / (eps prod_{i=1..l} (eps - i))
        EpsSeries denom = EpsSeries::linear(0.0);  // eps
        denom.lead = 1;
        denom.c[0] = 1.0;
        denom.c[1] = 0.0;
        EpsSeries poly = EpsSeries::constant(1.0);
        for (std::int64_t i = 1; i <= l; ++i) poly = poly * EpsSeries::linear(-static_cast<double>(i));
        denom = denom * poly;
        return detail::gamma_eps_positive(1.0) / denom;
    }
    if (z >= 0.5) return detail::gamma_eps_positive(z);
    // shift into [1, 2): Gamma(z+eps) = Gamma(z+N+eps) / prod_{i=0..N-1} (z+i+eps)
    int shift_n = static_cast<int>(std::ceil(1.0 - z));
    EpsSeries denom = EpsSeries::constant(1.0);
    for (int i = 0; i < shift_n; ++i) denom = denom * EpsSeries::linear(z + i);
    return detail::gamma_eps_positive(z + shift_n) / denom;
}

/// Laurent expansion of psi_j(z + eps). Non-positive integer z gives the pole
/// series; elsewhere Taylor with psi_{j..j+4}.
inline EpsSeries psi_eps(int order, double z) {
    std::int64_t l = 0;
    if (detail::near_nonpositive_integer(z, l)) {
        // psi_j(-l+eps) = psi_j(1+eps) - (-1)^j j! sum_{i=0..l} (eps-i)^{-j-1}
        EpsSeries r = psi_eps(order, 1.0);
        double fact = 1.0;
        for (int i = 2; i <= order; ++i) fact *= i;
        double sign = (order % 2 == 0) ? 1.0 : -1.0;
        for (std::int64_t i = 0; i <= l; ++i) {
            EpsSeries base = EpsSeries::linear(-static_cast<double>(i));
            if (i == 0) {
                base.lead = 1;
                base.c[0] = 1.0;
                base.c[1] = 0.0;
            }
            EpsSeries inv = inverse(base);
            EpsSeries pw = inv;
            for (int p = 1; p <= order; ++p) pw = pw * inv;
            r = r - sign * fact * pw;
        }
        return r;
    }
    if (z < 0.5) {
        // psi_j(z+eps) = psi_j(z+N+eps) - (-1)^j j! sum_{i=0..N-1} (z+i+eps)^{-j-1}
        int shift_n = static_cast<int>(std::ceil(1.0 - z));
        EpsSeries r = psi_eps(order, z + shift_n);
        double fact = 1.0;
        for (int i = 2; i <= order; ++i) fact *= i;
        double sign = (order % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < shift_n; ++i) {
            EpsSeries inv = inverse(EpsSeries::linear(z + i));
            EpsSeries pw = inv;
            for (int p = 1; p <= order; ++p) pw = pw * inv;
            r = r - sign * fact * pw;
        }
        return r;
    }
    EpsSeries r;
    double fact = 1.0;
    for (int i = 0; i < EpsSeries::window; ++i) {
        if (i > 0) fact *= i;
        r.c[i] = polygamma_real(order + i, z) / fact;
    }
    return r;
}

}  // namespace qent
