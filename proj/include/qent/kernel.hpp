#pragma once

// Wishart-Laguerre correlation kernel and the log-weighted Laguerre moment
// integrals behind the fourth induced cumulant. The closed form
//   int x^q e^{-x} L_s^(a)(x) L_t^(b)(x) dx
//     = (-1)^{s+t} sum_k C(q-a, s-k) C(q-b, t-k) Gamma(q+1+k)/k!
// extends to log^l weights by differentiating in q; both the plain and the
// differentiated values fall out of one eps-series product per summand, which
// also absorbs the indeterminate binomial-times-polygamma products at integer
// parameters.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qent/cumulants.hpp"
#include "qent/eps_series.hpp"
#include "qent/quadrature.hpp"
#include "qent/specfun.hpp"

namespace qent {

/// Generalized Laguerre polynomial L_k^(alpha)(x) by the upward three-term
/// recurrence (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
inline double laguerre(int k, double alpha, double x) {
    if (k < 0) throw domain_error("laguerre: negative degree");
    double lm1 = 0.0, l = 1.0;
    for (int i = 0; i < k; ++i) {
        double next = ((2.0 * i + 1.0 + alpha - x) * l - (i + alpha) * lm1) / (i + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

struct MasterIntegralSpec {
    double q = 0.0;   // power of x, q > -1
    int alpha = 0;    // order of the first Laguerre factor
    int beta = 0;     // order of the second
    int s = 0;        // degree of the first
    int t = 0;        // degree of the second
    int log_power = 0;
};

/// int_0^inf x^q e^{-x} ln^l(x) L_s^(alpha)(x) L_t^(beta)(x) dx.
/// Each summand is assembled as a Laurent series in eps around q and the
/// coefficient of eps^l (times l!) is the l-th q-derivative, which keeps the
/// vanishing-binomial cases finite without case analysis.
inline double master_integral(const MasterIntegralSpec& spec) {
    if (!(spec.q > -1.0)) throw domain_error("master_integral: q must exceed -1");
    if (spec.log_power < 0 || spec.log_power > 4)
        throw domain_error("master_integral: log_power must be in 0..4");
    if (spec.s < 0 || spec.t < 0) throw domain_error("master_integral: negative degree");
    const int l = spec.log_power;
    double l_fact = 1.0;
    for (int i = 2; i <= l; ++i) l_fact *= i;
    double total = 0.0;
    double k_fact = 1.0;
    const int kmax = std::min(spec.s, spec.t);
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) k_fact *= k;
        // C(q-alpha, s-k) = Gamma(q-alpha+1) / ((s-k)! Gamma(q-alpha-s+k+1))
        EpsSeries term = gamma_eps(spec.q - spec.alpha + 1.0) /
                         gamma_eps(spec.q - spec.alpha - spec.s + k + 1.0);
        term = term * (gamma_eps(spec.q - spec.beta + 1.0) /
                       gamma_eps(spec.q - spec.beta - spec.t + k + 1.0));
        term = term * gamma_eps(spec.q + 1.0 + k);
        double denom = factorial(spec.s - k) * factorial(spec.t - k) * k_fact;
        total += term.coeff(l) / denom;
    }
    double sign = ((spec.s + spec.t) % 2 == 0) ? 1.0 : -1.0;
    return sign * l_fact * total;
}

/// Same integral by adaptive quadrature; the independent cross-check.
inline double master_integral_quadrature(const MasterIntegralSpec& spec, double tol = 1e-12) {
    auto f = [&](double x) {
        if (x <= 0.0) return 0.0;
        double lg = 1.0;
        double lx = std::log(x);
        for (int i = 0; i < spec.log_power; ++i) lg *= lx;
        return std::pow(x, spec.q) * std::exp(-x) * lg * laguerre(spec.s, spec.alpha, x) *
               laguerre(spec.t, spec.beta, x);
    };
    return integrate_exp_tail(f, spec.q + spec.s + spec.t, spec.q, tol);
}

/// Correlation kernel K(x, y) of the Wishart-Laguerre ensemble as the rank-m
/// sum over orthonormal weighted Laguerre functions.
inline double kernel_K(SystemDims dims, double x, double y) {
    if (x < 0.0 || y < 0.0) throw domain_error("kernel_K: arguments must be non-negative");
    const int a = dims.n - dims.m;
    double sum = 0.0;
    for (int k = 0; k < dims.m; ++k) {
        double norm = factorial_ratio(k, k + a);  // k!/(n-m+k)!
        sum += norm * laguerre(k, a, x) * laguerre(k, a, y);
    }
    double w = std::exp(-0.5 * (x + y)) * std::pow(x * y, 0.5 * a);
    return w * sum;
}

/// One-point density g1(x) = K(x,x)/m in Christoffel-Darboux form, three
/// Laguerre polynomials of order n-m+1 instead of the m-term sum.
inline double one_point_density(SystemDims dims, double x) {
    if (x < 0.0) throw domain_error("one_point_density: argument must be non-negative");
    const int a = dims.n - dims.m;
    const int m = dims.m;
    double pref = factorial_ratio(m - 1, dims.n - 1);  // (m-1)!/(n-1)!
    double lm1 = laguerre(m - 1, a + 1, x);
    double lm2 = (m >= 2) ? laguerre(m - 2, a + 1, x) : 0.0;
    double lm = laguerre(m, a + 1, x);
    return pref * std::pow(x, a) * std::exp(-x) * (lm1 * lm1 - lm2 * lm);
}

/// Symmetric m x m matrix of normalized log-weighted Laguerre cross-moments,
///   M^(p,l)_{k1 k2} = int x^p ln^l(x) phi_{k1}(x) phi_{k2}(x) dx
/// with phi_k the orthonormal kernel functions. (p,l) = (0,0) is the identity.
inline std::vector<std::vector<double>> moment_matrix(SystemDims dims, int p, int l) {
    const int a = dims.n - dims.m;
    const int m = dims.m;
    std::vector<std::vector<double>> mat(m, std::vector<double>(m, 0.0));
    for (int k1 = 0; k1 < m; ++k1) {
        for (int k2 = k1; k2 < m; ++k2) {
            MasterIntegralSpec spec;
            spec.q = static_cast<double>(a + p);
            spec.alpha = spec.beta = a;
            spec.s = k1;
            spec.t = k2;
            spec.log_power = l;
            double norm = std::exp(0.5 * (log_factorial(k1) + log_factorial(k2) -
                                          log_factorial(a + k1) - log_factorial(a + k2)));
            mat[k1][k2] = mat[k2][k1] = norm * master_integral(spec);
        }
    }
    return mat;
}

struct KernelIntegrals {
    double IA, IB1, IB2, IC, ID;
};

/// The five correlation-function integrals of the fourth induced cumulant,
/// reduced to traces and contractions of the moment matrices by substituting
/// the rank-m kernel expansion.
inline KernelIntegrals integrals_IA_to_ID(SystemDims dims) {
    const int m = dims.m;
    auto m11 = moment_matrix(dims, 1, 1);
    auto m22 = moment_matrix(dims, 2, 2);
    auto m33 = moment_matrix(dims, 3, 3);
    auto m44 = moment_matrix(dims, 4, 4);

    KernelIntegrals r{0.0, 0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < m; ++i) r.IA += m44[i][i];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            r.IB1 += m22[i][j] * m22[i][j];
            r.IB2 += m33[i][j] * m11[i][j];
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) r.IC += m22[i][j] * m11[i][k] * m11[j][k];
    // I_D = tr((M11 M11^T)^2)
    std::vector<std::vector<double>> sq(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += m11[i][k] * m11[j][k];
            sq[i][j] = s;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r.ID += sq[i][j] * sq[j][i];
    return r;
}

/// kappa_4 of the induced entropy T by the integral path
/// I_A - 3 I_B1 - 4 I_B2 + 12 I_C - 6 I_D.
inline double kappa4T_via_integrals(SystemDims dims) {
    KernelIntegrals r = integrals_IA_to_ID(dims);
    return r.IA - 3.0 * r.IB1 - 4.0 * r.IB2 + 12.0 * r.IC - 6.0 * r.ID;
}

}  // namespace qent
