#pragma once

// Adaptive Gauss-Kronrod (G7/K15) quadrature. Integrands here are smooth away
// from x = 0, where powers of log x appear, so plain bisection with a strict
// depth cap is enough: the endpoint levels contribute geometrically.

#include <cmath>
#include <functional>

#include "qent/specfun.hpp"

namespace qent {

namespace detail {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule.
inline constexpr double gk_nodes[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

inline constexpr double gk_wk[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

inline constexpr double gk_wg[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct GkResult {
    double value;
    double error;
};

template <typename F>
GkResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double k = 0.0, g = 0.0;
    for (int i = 0; i < 15; ++i) {
        double fx = f(c + h * gk_nodes[i]);
        k += gk_wk[i] * fx;
        if (i % 2 == 1) g += gk_wg[i / 2] * fx;
    }
    k *= h;
    g *= h;
    double err = std::pow(200.0 * std::abs(k - g), 1.5);
    return {k, std::min(err, std::abs(k - g) * 200.0)};
}

template <typename F>
double adaptive_gk_impl(const F& f, double a, double b, double tol, int depth) {
    GkResult r = gk15(f, a, b);
    if (r.error <= tol || depth <= 0) {
        if (depth <= 0 && !(r.error <= 1e6 * tol))
            throw numeric_error("adaptive quadrature failed to converge");
        return r.value;
    }
    double m = 0.5 * (a + b);
    return adaptive_gk_impl(f, a, m, 0.5 * tol, depth - 1) +
           adaptive_gk_impl(f, m, b, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Integrates f over [a, b] to absolute tolerance tol.
template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-12, int max_depth = 48) {
    return detail::adaptive_gk_impl(f, a, b, tol, max_depth);
}

/// Integrates f over [0, inf) for integrands decaying like e^{-x} x^d log^l x.
/// The cutoff solves d ln X - X <= ln(tol) - 45 so the dropped tail is
/// negligible; [0,1] is mapped through x = t^p to soften the x^q log^l
/// endpoint when q is small.
template <typename F>
double integrate_exp_tail(const F& f, double power_degree, double q_at_zero,
                          double tol = 1e-12) {
    double x_max = std::max(80.0, 4.0 * power_degree);
    while (power_degree * std::log(x_max) - x_max > std::log(tol) - 45.0 && x_max < 1200.0)
        x_max *= 1.25;
    double left;
    if (q_at_zero < 4.0) {
        // exponent p makes t^{p(q+1)-1} at least cubic at t = 0
        int p = static_cast<int>(std::ceil(5.0 / (q_at_zero + 1.0)));
        p = std::max(p, 1);
        auto g = [&](double t) {
            double pw = static_cast<double>(p);
            return pw * std::pow(t, pw - 1.0) * f(std::pow(t, pw));
        };
        left = integrate(g, 0.0, 1.0, 0.5 * tol);
    } else {
        left = integrate(f, 0.0, 1.0, 0.5 * tol);
    }
    return left + integrate(f, 1.0, x_max, 0.5 * tol);
}

}  // namespace qent
