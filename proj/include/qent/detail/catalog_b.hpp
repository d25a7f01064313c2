#pragma once

// Second-type identities B2-B26: sums of (n-k)!/(m-k)! f(k) over k = 1..m.
// Right sides mix closed polygamma terms with the Omega-type inner sums over
// psi_j(k+n-m). Records containing psi_j(n-m) or 1/(n-m) are flagged
// needs_n_gt_m; their n = m limits resolve through the non-positive-argument
// expansions (see the eps-series machinery), which the grid runner does not
// attempt.

#include "qent/identities.hpp"

namespace qent::detail {

// The expression-building functions below are enormous after inlining and
// make the optimizer crawl; they run once at startup, so opt them out.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC push_options
#pragma GCC optimize("O0")
#endif

inline void build_catalog_b(std::vector<IdentityRecord>& out) {
    using namespace expr;
    const Ex m = make(Op::sym_m), n = make(Op::sym_n), a = make(Op::sym_a),
             k = make(Op::sym_k);
    const Ex one = num(1.0);
    const Ex ker = fact(n - k) / fact(m - k);
    const Ex N1 = n + 1.0;    // psi argument n+1
    const Ex M1 = m + 1.0;    // m+1
    const Ex NM = n - m;      // n-m
    const Ex NM1 = n - m + 1.0;
    const Ex NM2 = n - m + 2.0;
    const Ex nf_m1 = fact(n) / (fact(m - 1.0) * (n - m + 1.0));  // n!/((m-1)!(n-m+1))
    const Ex nf_m = fact(n) / fact(m);                           // n!/m!

    // Omega-type inner sums (arguments k+n-m, denominators k powers)
    const Ex O1 = sum_m(psi(0, k + n - m) / k);
    const Ex O2 = sum_m(sq(psi(0, k + n - m)) / k);
    const Ex O3 = sum_m(psi(1, k + n - m) / k);
    const Ex O4 = sum_m(psi(0, k + n - m) / sq(k));
    const Ex O5 = sum_m(sq(psi(0, k + n - m)) / sq(k));
    const Ex O7 = sum_m(psi(0, k + n - m) * psi(0, k) / k);
    const Ex O8 = sum_m(cu(psi(0, k + n - m)) / k);
    const Ex O9 = sum_m(sq(psi(0, k + n - m)) * psi(0, k) / k);
    const Ex O12 = sum_m(psi(0, k + n - m) * psi(1, k + n - m) / k);
    const Ex O13 = sum_m(psi(1, k + n - m) * psi(0, k) / k);
    const Ex O15 = sum_m(psi(2, k + n - m) / k);

    auto rec = [&out](const char* id, Ex lhs, Ex rhs, bool gt, const char* notes = "") {
        out.push_back({id, IdentityFamily::second_type, gt, notes, lhs, rhs});
    };

    rec("B2", sum_m(ker), nf_m1, false);

    rec("B3", sum_m(ker / k), nf_m * (psi(0, N1) - psi(0, NM1)), false);

    rec("B4", sum_m(ker * psi(0, k)),
        nf_m1 * (psi(0, N1) - psi(0, NM1) + psi(0, one) - 1.0 / (n - m + 1.0)), false);

    rec("B5", sum_m(ker * psi(0, k) / k),
        nf_m * (0.5 * (psi(1, N1) - psi(1, NM1) + sq(psi(0, N1)) + sq(psi(0, NM1))) +
                psi(0, one) * (psi(0, N1) - psi(0, NM1)) - psi(0, N1) * psi(0, NM1)),
        false);

    rec("B6", sum_m(ker * psi(0, n + 1.0 - k)),
        nf_m1 * (psi(0, N1) - 1.0 / (n - m + 1.0)), false);

    rec("B7", sum_m(ker * psi(0, n + 1.0 - k) / k),
        nf_m * (psi(1, N1) - psi(1, NM1) + psi(0, N1) * (psi(0, N1) - psi(0, NM1))),
        false);

    rec("B8", sum_m(ker * psi(0, k) * psi(0, n - k + 1.0)),
        fact(n) / (fact(m - 1.0) * sq(n - m + 1.0)) *
            (-(n - m + 1.0) * psi(1, NM1) + (n - m + 1.0) * psi(1, N1) -
             (n - m + 1.0) * psi(0, N1) * psi(0, NM1) + psi(0, NM1) +
             (n - m + 1.0) * sq(psi(0, N1)) +
             (n - m + 1.0) * psi(0, one) * psi(0, N1) - 2.0 * psi(0, N1) -
             psi(0, one) + 2.0 / (n - m + 1.0)),
        false);

    rec("B9", sum_m(ker * psi(0, k) * psi(0, n - k + 1.0) / k),
        fact(n) / (2.0 * fact(m)) *
            (-psi(2, NM1) + psi(2, N1) + cu(psi(0, N1)) -
             2.0 * sq(psi(0, N1)) * (psi(0, NM1) - psi(0, one)) +
             psi(0, N1) * (sq(psi(0, NM1)) - 2.0 * psi(0, one) * psi(0, NM1) -
                           3.0 * psi(1, NM1) + 3.0 * psi(1, N1)) +
             2.0 * (-psi(0, one) + psi(0, NM1)) * (psi(1, NM1) - psi(1, N1))),
        false);

    rec("B10", sum_m(ker * (sq(psi(0, n - k + 1.0)) + psi(1, n - k + 1.0))),
        fact(n) / (fact(m - 1.0) * cu(n - m + 1.0)) *
            (sq(n - m + 1.0) * psi(1, N1) - 2.0 * (n - m + 1.0) * psi(0, N1) +
             sq(n - m + 1.0) * sq(psi(0, N1)) + 2.0),
        false);

    rec("B11", sum_m(ker * (sq(psi(0, n - k + 1.0)) + psi(1, n - k + 1.0)) / k),
        nf_m * (-psi(2, NM1) + psi(2, N1) - psi(0, NM1) * psi(1, N1) +
                psi(0, N1) * (3.0 * psi(1, N1) - 2.0 * psi(1, NM1)) + cu(psi(0, N1)) -
                sq(psi(0, N1)) * psi(0, NM1)),
        false);

    rec("B12", sum_m(ker / (k + a)),
        fact(a + n) / fact(a + m) *
            sum_m(fact(k + n - m - 1.0) * fact(k + a - 1.0) /
                  (fact(k - 1.0) * fact(k + a + n - m))),
        false, "semi-closed in the extra real parameter a > -1");

    rec("B13", sum_m(ker / sq(k)),
        nf_m * O1 +
            nf_m * (0.5 * (psi(1, NM1) - psi(1, N1) + sq(psi(0, NM1)) - sq(psi(0, N1))) +
                    psi(0, NM) * (psi(0, N1) - psi(0, M1) - psi(0, NM1) + psi(0, one))),
        true);

    rec("B14", sum_m(ker / cu(k)),
        nf_m * (-0.5 * O3 + 0.5 * O2 - O7 + (psi(0, M1) - psi(0, N1)) * O1) +
            fact(n) / (12.0 * fact(m)) *
                (-2.0 * psi(2, NM) + 2.0 * psi(2, n) -
                 6.0 * psi(1, NM) * (-psi(0, M1) + psi(0, N1) + psi(0, one)) +
                 6.0 * psi(0, N1) * psi(1, n) - 2.0 * cu(psi(0, NM)) +
                 6.0 * (-psi(0, M1) + psi(0, N1) + psi(0, one)) * sq(psi(0, NM)) -
                 12.0 * psi(0, n) * psi(0, N1) * psi(0, NM) - 4.0 * cu(psi(0, n)) +
                 6.0 * sq(psi(0, n)) * (psi(0, NM) + psi(0, N1)) -
                 6.0 * psi(0, NM) *
                     (-psi(1, NM) + psi(1, n) + psi(1, m) - sq(psi(0, m)) -
                      2.0 * psi(1, M1) - 2.0 * psi(0, M1) * psi(0, N1) -
                      2.0 * psi(0, one) * psi(0, M1) + 2.0 * psi(0, m) * psi(0, M1) +
                      2.0 * psi(0, one) * psi(0, N1) + sq(psi(0, one)) + psi(1, one))),
        true);

    rec("B15", sum_m(ker * psi(0, k) / sq(k)),
        fact(n) / (2.0 * fact(m)) * (O3 + O2 - 2.0 * (psi(0, NM) - psi(0, one)) * O1) +
            fact(n) / (2.0 * fact(m)) *
                (-1.0 / 3.0 *
                     (psi(2, N1) - psi(2, NM1) + cu(psi(0, N1)) - cu(psi(0, NM1)) +
                      3.0 * psi(0, N1) * psi(1, N1) - 3.0 * psi(0, NM1) * psi(1, NM1)) +
                 (psi(0, NM) - psi(0, one)) *
                     (psi(1, N1) - psi(1, NM1) + sq(psi(0, N1)) - sq(psi(0, NM1))) -
                 (psi(1, NM) - sq(psi(0, NM)) + 2.0 * psi(0, one) * psi(0, NM)) *
                     (psi(0, M1) - psi(0, N1) + psi(0, NM1) - psi(0, one))),
        true);

    rec("B16", sum_m(ker * psi(0, k) / cu(k)),
        nf_m * (-1.0 / 6.0 * O15 - 0.5 * O13 + 1.0 / 3.0 * O8 - 0.5 * O9 +
                0.5 * (psi(0, NM) - psi(0, N1) + psi(0, M1) - psi(0, one)) * O3 -
                0.5 * (psi(0, NM) + psi(0, N1) - psi(0, M1) - psi(0, one)) * O2 +
                (psi(0, NM) - psi(0, one)) * O7 +
                (psi(0, N1) * psi(0, NM) - psi(0, M1) * psi(0, NM) -
                 psi(0, one) * psi(0, N1) + psi(0, one) * psi(0, M1)) *
                    O1) +
            fact(n) / (24.0 * fact(m)) *
                (-psi(3, NM) + psi(3, n) +
                 (4.0 * psi(0, NM) - 4.0 * psi(0, N1) + 4.0 * psi(0, M1) -
                  8.0 * psi(0, one)) *
                     psi(2, NM) +
                 4.0 * (-psi(0, NM) + psi(0, N1) + psi(0, one)) * psi(2, n) +
                 3.0 * sq(psi(1, NM)) + 3.0 * sq(psi(1, n)) -
                 6.0 * psi(1, NM) *
                     (psi(1, n) - sq(psi(0, n)) + 2.0 * psi(0, n) * psi(0, N1) -
                      2.0 * psi(0, M1) * psi(0, N1) + 4.0 * psi(0, one) * psi(0, N1) +
                      psi(1, m) - sq(psi(0, m)) - 4.0 * psi(0, one) * psi(0, M1) +
                      2.0 * psi(0, m) * psi(0, M1) - 2.0 * psi(1, M1) + psi(1, one) +
                      3.0 * sq(psi(0, one))) -
                 6.0 *
                     (sq(psi(0, n)) - 2.0 * psi(0, N1) * psi(0, n) -
                      2.0 * psi(0, one) * psi(0, N1)) *
                     psi(1, n) +
                 p4(psi(0, NM)) +
                 4.0 * (psi(0, M1) - psi(0, N1) - 2.0 * psi(0, one)) * cu(psi(0, NM)) +
                 6.0 *
                     (-psi(1, NM) + psi(1, n) - 2.0 * psi(1, M1) - sq(psi(0, n)) -
                      sq(psi(0, m)) - 2.0 * psi(0, M1) * psi(0, N1) -
                      4.0 * psi(0, one) * psi(0, M1) + 2.0 * psi(0, m) * psi(0, M1) +
                      psi(1, m) + 4.0 * psi(0, one) * psi(0, N1) +
                      2.0 * psi(0, n) * psi(0, N1) + psi(1, one) + 3.0 * sq(psi(0, one))) *
                     sq(psi(0, NM)) +
                 4.0 *
                     (2.0 * cu(psi(0, n)) - 3.0 * sq(psi(0, n)) * psi(0, N1) +
                      3.0 * (psi(0, N1) - psi(0, M1) + 2.0 * psi(0, one)) * psi(1, NM) -
                      3.0 * (psi(0, N1) + psi(0, one)) * psi(1, n) -
                      3.0 * psi(0, one) * psi(1, m) + 6.0 * psi(0, one) * psi(1, M1) +
                      6.0 * psi(0, one) * psi(0, M1) * (psi(0, N1) + psi(0, one)) +
                      3.0 * psi(0, one) * sq(psi(0, m)) -
                      6.0 * psi(0, one) * psi(0, m) * psi(0, M1) -
                      6.0 * sq(psi(0, one)) * psi(0, N1) +
                      3.0 * psi(0, one) * sq(psi(0, n)) -
                      6.0 * psi(0, one) * psi(0, n) * psi(0, N1) -
                      3.0 * psi(1, one) * psi(0, one) - 3.0 * cu(psi(0, one))) *
                     psi(0, NM) -
                 sq(psi(0, n)) *
                     (3.0 * sq(psi(0, n)) + 8.0 * psi(0, one) * psi(0, n) -
                      4.0 * psi(0, N1) * psi(0, n) - 12.0 * psi(0, one) * psi(0, N1))),
        true);

    rec("B17", sum_m(ker * sq(psi(0, k))),
        nf_m1 * O1 +
            fact(n) / (2.0 * fact(m - 1.0)) * (one / (n - m + 1.0)) *
                (4.0 * (psi(1, NM1) - psi(1, NM2)) -
                 4.0 * (-psi(0, NM1) + psi(0, N1) + psi(0, one)) *
                     (psi(0, NM2) - psi(0, NM1)) -
                 2.0 * (psi(0, NM1) - psi(0, NM)) *
                     (-psi(0, NM1) - psi(0, M1) + psi(0, N1) + psi(0, one)) +
                 2.0 * (psi(0, M1) - psi(0, m)) * (psi(0, NM1) - psi(0, N1)) +
                 (-2.0 * psi(0, one) * psi(0, NM1) + sq(psi(0, NM1)) -
                  2.0 * psi(0, M1) * psi(0, NM1) - 2.0 * psi(0, N1) * psi(0, NM1) -
                  psi(1, NM1) + 4.0 * psi(0, one) * psi(0, N1) + sq(psi(0, N1)) +
                  psi(1, N1) + 2.0 * sq(psi(0, one)))),
        true);

    rec("B18", sum_m(ker * sq(psi(0, k)) / k),
        nf_m * (-O2 + (psi(0, NM) + psi(0, N1) - one / (n - m)) * O1) +
            fact(n) / (6.0 * fact(m)) *
                (-psi(2, NM1) + psi(2, N1) - cu(psi(0, NM1)) +
                 6.0 * psi(0, M1) * sq(psi(0, NM1)) + cu(psi(0, N1)) +
                 sq(psi(0, N1)) * (6.0 * psi(0, one) - 3.0 * psi(0, NM1)) -
                 3.0 * psi(0, NM1) *
                     (2.0 * (psi(0, M1) - psi(0, one)) * psi(0, NM) + psi(1, N1) -
                      3.0 * psi(1, NM1) + 2.0 * (psi(1, NM) + sq(psi(0, one)))) +
                 3.0 * psi(0, N1) *
                     (2.0 * psi(0, NM) * (psi(0, one) - psi(0, M1)) +
                      psi(0, NM1) * (-4.0 * psi(0, one) + psi(0, NM1)) +
                      2.0 * (psi(1, NM) + sq(psi(0, one))) - 3.0 * psi(1, NM1) +
                      psi(1, N1)) +
                 6.0 * psi(0, one) * psi(1, N1) -
                 6.0 * psi(1, NM) * (psi(0, M1) - psi(0, one)) +
                 6.0 * psi(1, NM1) * (psi(0, M1) - 2.0 * psi(0, one))),
        true);

    rec("B19", sum_m(ker * sq(psi(0, k)) / sq(k)),
        nf_m * (1.0 / 6.0 * O15 + O12 + 0.5 * sq(O1) - 1.0 / 3.0 * O8 + O9 -
                (psi(0, NM) - psi(0, one)) * O3 + 0.5 * O5 - psi(0, NM) * O4 +
                (psi(0, N1) - psi(0, M1) + psi(0, one)) * O2 - 2.0 * psi(0, NM) * O7 +
                0.5 *
                    (-psi(1, NM) + sq(psi(0, NM)) -
                     2.0 * psi(0, NM) * (psi(0, N1) - psi(0, M1) + psi(0, one)) -
                     psi(1, N1) - sq(psi(0, N1)) + 2.0 * sq(psi(0, one))) *
                    O1) +
            fact(n) / (24.0 * fact(m)) *
                (psi(3, NM1) - psi(3, N1) -
                 4.0 * (psi(0, M1) - 3.0 * psi(0, one)) * psi(2, NM1) -
                 8.0 * psi(0, one) * psi(2, N1) - 3.0 * sq(psi(1, NM1)) +
                 6.0 * psi(1, N1) * psi(1, NM1) - 6.0 * sq(psi(0, NM1)) * psi(1, NM1) +
                 36.0 * sq(psi(0, one)) * psi(1, NM1) -
                 24.0 * psi(0, one) * psi(0, M1) * psi(1, NM1) - 3.0 * sq(psi(1, N1)) +
                 6.0 * sq(psi(0, NM1)) * psi(1, N1) -
                 12.0 * sq(psi(0, one)) * psi(1, N1) + 3.0 * p4(psi(0, NM1)) -
                 24.0 * psi(0, one) * cu(psi(0, NM1)) +
                 8.0 * psi(0, M1) * cu(psi(0, NM1)) +
                 36.0 * sq(psi(0, one)) * sq(psi(0, NM1)) -
                 24.0 * psi(0, one) * psi(0, M1) * sq(psi(0, NM1)) - p4(psi(0, N1)) -
                 4.0 * cu(psi(0, N1)) * (2.0 * psi(0, one) - psi(0, NM)) +
                 6.0 * sq(psi(0, N1)) *
                     (sq(psi(0, NM1)) + psi(1, NM1) - psi(1, N1) -
                      2.0 * psi(0, NM) * (psi(0, NM1) - psi(0, M1) - psi(0, one)) -
                      2.0 * sq(psi(0, one))) +
                 4.0 * psi(0, NM) *
                     (9.0 * psi(0, one) * sq(psi(0, NM1)) - psi(2, NM1) + psi(2, N1) -
                      3.0 * psi(0, one) * (3.0 * psi(1, NM1) - psi(1, N1)) -
                      cu(psi(0, NM1)) -
                      3.0 * psi(0, NM1) *
                          (psi(1, N1) - psi(1, NM1) + 6.0 * sq(psi(0, one))) +
                      3.0 * psi(0, M1) *
                          (psi(1, NM1) + psi(1, N1) +
                           4.0 * psi(0, one) * psi(0, NM1) - sq(psi(0, NM1)) -
                           2.0 * sq(psi(0, one))) +
                      6.0 * cu(psi(0, one))) +
                 4.0 * psi(0, N1) *
                     (psi(2, NM1) - 2.0 * cu(psi(0, NM1)) - psi(2, N1) +
                      6.0 * psi(0, one) * sq(psi(0, NM1)) +
                      6.0 * psi(0, one) * (psi(1, NM1) - psi(1, N1)) +
                      3.0 * psi(0, NM) *
                          (-psi(1, NM1) + sq(psi(0, NM1)) + psi(1, N1) -
                           4.0 * psi(0, one) * psi(0, NM1) + 2.0 * sq(psi(0, one))))),
        true);

    rec("B20", sum_m(ker * psi(0, n + 1.0 - k) / sq(k)),
        nf_m * (O3 + psi(0, N1) * O1) +
            nf_m * (0.5 * psi(2, NM1) - 0.5 * psi(2, N1) + psi(0, NM1) * psi(1, NM1) +
                    psi(0, N1) * (0.5 * (psi(1, NM1) - psi(1, N1) + sq(psi(0, NM1)) -
                                         sq(psi(0, N1))) +
                                  psi(0, NM) * (psi(0, N1) - psi(0, NM1) - psi(0, M1) +
                                                psi(0, one)) +
                                  psi(1, NM) - psi(1, N1)) -
                    psi(1, NM) * (psi(0, NM1) + psi(0, M1) - psi(0, one)) +
                    psi(0, NM) * (psi(1, N1) - psi(1, NM1))),
        true);

    rec("B21", sum_m(ker * psi(0, n + 1.0 - k) / cu(k)),
        nf_m * (O12 - 0.5 * O15 - O13 -
                0.5 * (3.0 * psi(0, N1) - 2.0 * psi(0, M1)) * O3 - psi(0, N1) * O7 +
                0.5 * psi(0, N1) * O2 -
                (psi(1, N1) - psi(0, M1) * psi(0, N1) + sq(psi(0, N1))) * O1) +
            fact(n) / (6.0 * fact(m)) *
                (-psi(3, NM) + psi(3, n) +
                 (3.0 * psi(0, NM) + 3.0 * psi(0, M1) - 4.0 * psi(0, N1) -
                  3.0 * psi(0, one)) *
                     psi(2, NM) +
                 (4.0 * psi(0, N1) - 3.0 * psi(0, NM)) * psi(2, n) +
                 3.0 * sq(psi(1, n) - psi(1, NM)) +
                 3.0 * sq(psi(0, NM)) * (psi(1, n) - psi(1, NM)) +
                 9.0 * (psi(0, NM) + psi(0, M1) - psi(0, one)) * psi(0, N1) *
                     psi(1, NM) -
                 3.0 *
                     (-sq(psi(0, m)) + psi(1, m) - 2.0 * psi(1, M1) -
                      2.0 * psi(0, one) * psi(0, M1) + 2.0 * psi(0, m) * psi(0, M1) +
                      sq(psi(0, one)) + psi(1, one)) *
                     psi(1, NM) -
                 psi(0, N1) * cu(psi(0, NM)) -
                 3.0 * psi(0, N1) * psi(0, NM) *
                     (3.0 * psi(1, n) - sq(psi(0, m)) - 2.0 * psi(1, M1) -
                      psi(0, one) * psi(0, NM) + psi(0, M1) * psi(0, NM) -
                      2.0 * psi(0, one) * psi(0, M1) + 2.0 * psi(0, m) * psi(0, M1) +
                      psi(1, m) + psi(1, one) + sq(psi(0, one))) -
                 6.0 * psi(0, NM) * (psi(0, one) - psi(0, M1)) *
                     (psi(1, n) - psi(1, NM)) -
                 3.0 * p4(psi(0, n)) +
                 (6.0 * psi(0, NM) + 4.0 * psi(0, N1)) * cu(psi(0, n)) +
                 3.0 * sq(psi(0, n)) *
                     (2.0 * psi(1, NM) - 2.0 * psi(1, n) -
                      (psi(0, NM) + 3.0 * psi(0, N1) + 2.0 * psi(0, M1) -
                       2.0 * psi(0, one)) *
                          psi(0, NM)) +
                 6.0 * psi(0, n) * psi(0, N1) *
                     (-2.0 * psi(1, NM) + 2.0 * psi(1, n) +
                      psi(0, NM) *
                          (psi(0, NM) + 2.0 * psi(0, M1) - 2.0 * psi(0, one)))),
        true);

    rec("B22", sum_m(ker * psi(0, k) * psi(0, n - k + 1.0) / sq(k)),
        nf_m * (O12 + 0.5 * O15 +
                0.5 * (-2.0 * psi(0, NM) + psi(0, N1) + 2.0 * psi(0, one)) * O3 +
                0.5 * psi(0, N1) * O2 -
                (psi(0, N1) * psi(0, NM) + psi(1, NM) - psi(0, one) * psi(0, N1)) *
                    O1) +
            fact(n) / (6.0 * fact(m)) *
                (psi(3, NM1) - psi(3, N1) + 3.0 * psi(0, NM1) * psi(2, NM1) -
                 3.0 * psi(0, N1) * psi(2, N1) - 3.0 * sq(psi(1, N1)) +
                 3.0 * sq(psi(1, NM1)) + 3.0 * sq(psi(0, NM1)) * psi(1, NM1) -
                 3.0 * sq(psi(0, N1)) * psi(1, N1) -
                 3.0 * psi(2, NM) *
                     (psi(0, NM1) + psi(0, M1) - psi(0, N1) - psi(0, one)) +
                 3.0 * (psi(1, N1) - psi(1, NM1)) *
                     (-sq(psi(0, NM)) + 2.0 * psi(0, one) * psi(0, NM) + psi(1, NM)) +
                 3.0 * psi(1, NM) *
                     (-sq(psi(0, NM1)) - psi(1, NM1) + sq(psi(0, N1)) + psi(1, N1)) +
                 6.0 * psi(1, NM) * (psi(0, NM) - psi(0, one)) *
                     (psi(0, NM1) + psi(0, M1) - psi(0, N1) - psi(0, one)) +
                 3.0 * (psi(0, NM) - psi(0, one)) *
                     (-psi(2, NM1) - 2.0 * psi(0, NM1) * psi(1, NM1) +
                      2.0 * psi(0, N1) * psi(1, N1) + psi(2, N1)) +
                 3.0 * psi(0, N1) *
                     (-psi(0, NM1) - psi(0, M1) + psi(0, N1) + psi(0, one)) *
                     (-sq(psi(0, NM)) + 2.0 * psi(0, one) * psi(0, NM) + psi(1, NM)) +
                 3.0 * psi(0, N1) * (psi(0, NM) - psi(0, one)) *
                     (-psi(1, NM1) - sq(psi(0, NM1)) + sq(psi(0, N1)) + psi(1, N1)) +
                 psi(0, N1) *
                     (cu(psi(0, NM1)) + 3.0 * psi(0, NM1) * psi(1, NM1) +
                      psi(2, NM1) - cu(psi(0, N1)) - 3.0 * psi(1, N1) * psi(0, N1) -
                      psi(2, N1))),
        true);

    rec("B23", sum_m(ker * psi(1, k)),
        -nf_m1 * O1 -
            nf_m1 * (0.5 * (psi(1, NM1) - psi(1, n) - sq(psi(0, n)) + sq(psi(0, NM1))) +
                     psi(0, NM) *
                         (psi(0, n) - psi(0, m) - psi(0, NM1) + psi(0, one)) -
                     psi(1, one) - (psi(0, n) - psi(0, NM1)) / n - psi(0, n) / m),
        true);

    rec("B24", sum_m(ker * psi(1, k) / k),
        nf_m * ((-psi(0, NM) - psi(0, N1) + one / (n - m)) * O1 + O2) -
            fact(n) / (6.0 * fact(m)) *
                (psi(2, NM1) - psi(2, N1) - 3.0 * psi(0, NM1) * psi(1, NM1) +
                 3.0 * psi(0, N1) * psi(1, NM1) + 3.0 * psi(1, N1) * psi(0, NM1) -
                 3.0 * psi(0, N1) * psi(1, N1) - 3.0 * psi(0, N1) * sq(psi(0, NM1)) +
                 cu(psi(0, NM1)) + 3.0 * sq(psi(0, N1)) * psi(0, NM1) -
                 6.0 * psi(0, m) * psi(0, N1) * psi(0, NM1) +
                 6.0 * psi(0, N1) * psi(0, NM1) * psi(0, one) +
                 6.0 * psi(1, one) * psi(0, NM1) - 6.0 * psi(1, one) * psi(0, N1) -
                 cu(psi(0, N1)) +
                 6.0 * (psi(0, NM1) - psi(0, NM)) *
                     (psi(0, m) * psi(0, N1) + psi(0, N1) * psi(0, NM1) -
                      psi(0, one) * psi(0, NM1) + psi(0, m) * psi(0, NM1) -
                      psi(0, one) * psi(0, N1)) -
                 6.0 * (psi(1, NM1) - psi(1, NM)) *
                     (sq(n) * psi(0, m) * psi(0, N1) * psi(0, NM1) -
                      n * psi(0, m) * psi(0, N1) -
                      sq(n) * psi(0, M1) * psi(0, N1) * psi(0, NM1) +
                      n * psi(0, M1) * psi(0, N1) - n * psi(0, m) * psi(0, NM1) +
                      n * psi(0, M1) * psi(0, NM1) + n * psi(0, N1) * psi(0, NM1) -
                      2.0 * psi(0, NM1) - psi(0, M1) + psi(0, one))),
        true);

    rec("B25", sum_m(ker * psi(1, k) / sq(k)),
        nf_m * (-0.5 * sq(O1) + 1.0 / 6.0 * O15 + 2.0 / 3.0 * O8 - 0.5 * O5 - O9 -
                (psi(0, NM) + psi(0, N1) - psi(0, M1)) * O2 + psi(0, NM) * O4 +
                2.0 * psi(0, NM) * O7 +
                0.5 *
                    (sq(psi(0, NM)) + 2.0 * psi(0, N1) * psi(0, NM) -
                     2.0 * psi(0, one) * psi(0, NM) - 2.0 * psi(0, M1) * psi(0, NM) -
                     psi(1, NM) + sq(psi(0, N1)) + psi(1, N1) + 2.0 * psi(1, one)) *
                    O1) +
            fact(n) / (24.0 * fact(m)) *
                (-psi(3, NM1) + 2.0 * psi(3, NM) + psi(3, N1) - 2.0 * psi(3, n) +
                 4.0 * psi(2, NM1) *
                     (psi(0, M1) - psi(0, N1) - 3.0 * psi(0, one)) +
                 8.0 * psi(2, NM) * (-psi(0, M1) + psi(0, N1) + 2.0 * psi(0, one)) +
                 3.0 * sq(psi(1, NM1)) - 3.0 * p4(psi(0, NM1)) - 2.0 * p4(psi(0, NM)) -
                 8.0 * cu(psi(0, NM)) *
                     (psi(0, M1) - psi(0, N1) - 2.0 * psi(0, one)) +
                 6.0 * p4(psi(0, n)) + p4(psi(0, N1)) +
                 8.0 * cu(psi(0, n)) * (2.0 * psi(0, one) - psi(0, N1)) +
                 8.0 * cu(psi(0, NM1)) *
                     (psi(0, N1) - psi(0, M1) + 3.0 * psi(0, one)) -
                 12.0 * sq(psi(0, one)) * psi(1, n) +
                 4.0 * psi(0, one) * psi(0, N1) *
                     (2.0 * sq(psi(0, N1)) + 3.0 * psi(0, one) * psi(0, N1) -
                      6.0 * psi(1, n)) -
                 6.0 * psi(1, n) * (psi(1, n) + 2.0 * psi(1, one)) +
                 sq(psi(0, NM1)) *
                     (-6.0 * sq(psi(0, N1)) - 24.0 * psi(0, one) * psi(0, N1) -
                      6.0 * psi(1, N1) + 24.0 * psi(0, one) * psi(0, M1) -
                      36.0 * sq(psi(0, one))) +
                 3.0 * psi(1, N1) *
                     (8.0 * psi(0, one) * psi(0, N1) + 2.0 * sq(psi(0, N1)) +
                      psi(1, N1) + 4.0 * sq(psi(0, one))) +
                 12.0 * psi(0, NM) * psi(0, NM1) *
                     (psi(1, N1) + sq(psi(0, N1)) + 4.0 * psi(0, one) * psi(0, N1) -
                      4.0 * psi(0, one) * psi(0, M1) + 6.0 * sq(psi(0, one))) +
                 12.0 * sq(psi(0, n)) *
                     (-psi(1, NM) - 2.0 * psi(0, one) * psi(0, N1) + psi(1, n) +
                      sq(psi(0, one)) + psi(1, one)) +
                 12.0 * psi(0, one) * psi(1, NM) *
                     (-2.0 * psi(0, M1) + 2.0 * psi(0, N1) + 3.0 * psi(0, one)) -
                 24.0 * psi(0, NM) * psi(1, NM) *
                     (-psi(0, M1) + psi(0, N1) + 2.0 * psi(0, one)) +
                 6.0 * psi(1, NM) *
                     (-psi(1, NM) + 2.0 * psi(1, n) + 2.0 * psi(1, one)) -
                 12.0 * sq(psi(0, NM)) *
                     (-psi(1, NM) - 2.0 * psi(0, one) * psi(0, M1) +
                      2.0 * psi(0, one) * psi(0, N1) - sq(psi(0, n)) +
                      2.0 * psi(0, n) * psi(0, N1) + psi(1, n) + 3.0 * sq(psi(0, one)) +
                      psi(1, one)) -
                 24.0 * psi(0, n) * psi(0, N1) *
                     (-psi(1, NM) + psi(1, n) + sq(psi(0, one)) + psi(1, one)) +
                 12.0 * psi(0, NM) * psi(1, NM1) *
                     (-psi(0, NM1) - psi(0, M1) + psi(0, N1) + 3.0 * psi(0, one)) +
                 psi(1, NM1) *
                     (6.0 * sq(psi(0, NM1)) + 24.0 * psi(0, one) * psi(0, M1) -
                      24.0 * psi(0, one) * psi(0, N1) - 6.0 * sq(psi(0, N1)) -
                      6.0 * psi(1, N1) - 36.0 * sq(psi(0, one))) -
                 8.0 * psi(2, n) * (psi(0, N1) + psi(0, one)) +
                 4.0 * psi(2, N1) * (psi(0, N1) + 2.0 * psi(0, one)) -
                 4.0 * psi(0, NM) *
                     (2.0 * psi(2, NM) - psi(2, NM1) + psi(2, N1) - 2.0 * psi(2, n) -
                      cu(psi(0, NM1)) + 3.0 * psi(0, M1) * sq(psi(0, N1)) +
                      9.0 * psi(0, one) * sq(psi(0, NM1)) -
                      3.0 * psi(0, M1) * sq(psi(0, NM1)) +
                      3.0 * psi(0, N1) * sq(psi(0, NM1)) +
                      3.0 * psi(0, M1) * psi(1, N1) + 6.0 * psi(1, one) * psi(0, M1) +
                      4.0 * cu(psi(0, n)) + 6.0 * psi(0, one) * sq(psi(0, n)) -
                      6.0 * psi(0, N1) * sq(psi(0, n)) -
                      12.0 * psi(0, one) * psi(0, N1) * psi(0, n) + cu(psi(0, N1)) +
                      3.0 * psi(0, one) * sq(psi(0, N1)) -
                      6.0 * psi(1, one) * psi(0, N1) - 6.0 * psi(0, one) * psi(1, n) +
                      3.0 * psi(0, one) * psi(1, N1) - 6.0 * psi(0, N1) * psi(1, n) +
                      3.0 * psi(0, N1) * psi(1, N1) -
                      6.0 * psi(0, one) * psi(1, one))),
        true);

    rec("B26",
        sum_m(ker * (sq(psi(0, n - k + 1.0)) + psi(1, n - k + 1.0)) / sq(k)),
        nf_m * (O15 + 2.0 * psi(0, N1) * O3 + (sq(psi(0, N1)) + psi(1, N1)) * O1) +
            fact(n) / (2.0 * fact(m)) *
                (psi(3, NM1) - psi(3, N1) +
                 psi(2, NM1) * (2.0 * psi(0, NM1) + 2.0 * psi(0, N1)) +
                 2.0 * sq(psi(1, NM1)) +
                 psi(1, NM1) *
                     (-4.0 * psi(1, NM) + 4.0 * psi(0, N1) * psi(0, NM1) +
                      sq(psi(0, N1)) + psi(1, N1)) -
                 p4(psi(0, N1)) + sq(psi(0, N1)) * sq(psi(0, NM1)) -
                 2.0 * psi(0, NM) * psi(0, NM1) * (sq(psi(0, N1)) + psi(1, N1)) -
                 3.0 * sq(psi(1, N1)) +
                 psi(1, N1) *
                     (sq(psi(0, NM1)) + 4.0 * psi(1, NM) - 6.0 * sq(psi(0, N1))) +
                 4.0 * psi(0, N1) * psi(1, NM) *
                     (-psi(0, NM1) - psi(0, M1) + psi(0, N1) + psi(0, one)) -
                 2.0 * psi(2, NM) * (psi(0, NM1) + psi(0, M1) - psi(0, one)) +
                 2.0 * psi(0, N1) *
                     (-2.0 * psi(0, NM) * psi(1, NM1) + psi(2, NM) -
                      2.0 * psi(2, N1)) +
                 psi(0, NM) *
                     (-2.0 * psi(0, M1) * sq(psi(0, N1)) -
                      2.0 * psi(0, M1) * psi(1, N1) - 2.0 * psi(2, NM1) +
                      2.0 * cu(psi(0, N1)) + 6.0 * psi(1, N1) * psi(0, N1) +
                      2.0 * psi(0, one) * sq(psi(0, N1)) +
                      2.0 * psi(0, one) * psi(1, N1) + 2.0 * psi(2, N1))),
        true);

    (void)a;
}


#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC pop_options
#endif

}  // namespace qent::detail
