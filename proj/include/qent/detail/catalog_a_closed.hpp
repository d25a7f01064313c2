#pragma once

// First-type closed-form identities A3-A37: sums over k = 1..n of
// k^c psi_i^j(k+a) against closed expressions in psi_i(a+n+1) and psi_i(a+1).
// Transcribed term by term from the printed formulas; the grid tests are the
// only safety net, so keep edits minimal and literal.

#include "qent/identities.hpp"

namespace qent::detail {

// The expression-building functions below are enormous after inlining and
// make the optimizer crawl; they run once at startup, so opt them out.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC push_options
#pragma GCC optimize("O0")
#endif

inline void build_catalog_a_closed(std::vector<IdentityRecord>& out) {
    using namespace expr;
    const Ex m = make(Op::sym_m), n = make(Op::sym_n), a = make(Op::sym_a),
             k = make(Op::sym_k);
    const Ex An = a + n + 1.0;  // right-edge argument a+n+1
    const Ex A1 = a + 1.0;

    auto rec = [&out](const char* id, Ex lhs, Ex rhs, const char* notes = "") {
        out.push_back({id, IdentityFamily::first_type, false, notes, lhs, rhs});
    };

    // ---- sum k^c psi_0(k+a), c = 0..4 (A3-A7) ----
    rec("A3", sum_n(psi(0, k + a)),
        (a + n) * psi(0, An) - a * psi(0, A1) - n);

    rec("A4", sum_n(k * psi(0, k + a)),
        0.5 * (-sq(a) + a + sq(n) + n) * psi(0, An) + 0.5 * (a - 1.0) * a * psi(0, A1) +
            0.25 * n * (2.0 * a - n - 3.0));

    rec("A5", sum_n(sq(k) * psi(0, k + a)),
        1.0 / 6.0 * (2.0 * cu(a) - 3.0 * sq(a) + a + 2.0 * cu(n) + 3.0 * sq(n) + n) *
                psi(0, An) -
            1.0 / 6.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * psi(0, A1) -
            1.0 / 36.0 * n *
                (12.0 * sq(a) - 6.0 * a * n - 24.0 * a + 4.0 * sq(n) + 15.0 * n + 17.0));

    rec("A6", sum_n(cu(k) * psi(0, k + a)),
        -0.25 * (p4(a) - 2.0 * cu(a) + sq(a) - p4(n) - 2.0 * cu(n) - sq(n)) * psi(0, An) +
            0.25 * sq(a - 1.0) * sq(a) * psi(0, A1) -
            1.0 / 48.0 * n *
                (-12.0 * cu(a) + 6.0 * sq(a) * n + 30.0 * sq(a) - 4.0 * a * sq(n) -
                 18.0 * a * n - 26.0 * a + 3.0 * cu(n) + 14.0 * sq(n) + 21.0 * n + 10.0));

    rec("A7", sum_n(p4(k) * psi(0, k + a)),
        1.0 / 1800.0 *
            (60.0 *
                 (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a + 6.0 * p5(n) +
                  15.0 * p4(n) + 10.0 * cu(n) - n) *
                 psi(0, An) -
             60.0 * (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a) * psi(0, A1) -
             120.0 * sq(a) * cu(n) + 180.0 * cu(a) * sq(n) - 630.0 * sq(a) * sq(n) -
             360.0 * p4(a) * n + 1080.0 * cu(a) * n - 1110.0 * sq(a) * n +
             90.0 * a * p4(n) + 480.0 * a * cu(n) + 840.0 * a * sq(n) + 450.0 * a * n -
             72.0 * p5(n) - 405.0 * p4(n) - 770.0 * cu(n) - 525.0 * sq(n) - 28.0 * n));

    // ---- sum k^c psi_0^2(k+a), c = 0..4 (A8-A12) ----
    rec("A8", sum_n(sq(psi(0, k + a))),
        (a + n) * sq(psi(0, An)) - (2.0 * a + 2.0 * n + 1.0) * psi(0, An) -
            a * sq(psi(0, A1)) + (2.0 * a + 1.0) * psi(0, A1) + 2.0 * n);

    rec("A9", sum_n(k * sq(psi(0, k + a))),
        0.5 * (-sq(a) + a + sq(n) + n) * sq(psi(0, An)) +
            0.25 *
                (6.0 * sq(a) + 4.0 * a * n - 2.0 * a - 2.0 * sq(n) - 6.0 * n - 2.0) *
                psi(0, An) +
            0.5 * (a - 1.0) * a * sq(psi(0, A1)) +
            0.25 * (-6.0 * sq(a) + 2.0 * a + 2.0) * psi(0, A1) +
            0.25 * n * (-6.0 * a + n + 5.0));

    rec("A10", sum_n(sq(k) * sq(psi(0, k + a))),
        1.0 / 6.0 * (2.0 * cu(a) - 3.0 * sq(a) + a + 2.0 * cu(n) + 3.0 * sq(n) + n) *
                sq(psi(0, An)) -
            1.0 / 18.0 *
                (22.0 * cu(a) + 12.0 * sq(a) * n - 21.0 * sq(a) - 6.0 * a * sq(n) -
                 24.0 * a * n - a + 4.0 * cu(n) + 15.0 * sq(n) + 17.0 * n + 3.0) *
                psi(0, An) -
            1.0 / 6.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * sq(psi(0, A1)) +
            1.0 / 18.0 * (22.0 * cu(a) - 21.0 * sq(a) - a + 3.0) * psi(0, A1) +
            1.0 / 108.0 * n *
                (132.0 * sq(a) - 30.0 * a * n - 192.0 * a + 8.0 * sq(n) + 39.0 * n + 79.0));

    rec("A11", sum_n(cu(k) * sq(psi(0, k + a))),
        -0.25 * (p4(a) - 2.0 * cu(a) + sq(a) - p4(n) - 2.0 * cu(n) - sq(n)) *
                sq(psi(0, An)) +
            1.0 / 24.0 *
                (25.0 * p4(a) + 12.0 * cu(a) * n - 38.0 * cu(a) - 6.0 * sq(a) * sq(n) -
                 30.0 * sq(a) * n + 11.0 * sq(a) + 4.0 * a * cu(n) + 18.0 * a * sq(n) +
                 26.0 * a * n + 2.0 * a - 3.0 * p4(n) - 14.0 * cu(n) - 21.0 * sq(n) -
                 10.0 * n) *
                psi(0, An) +
            0.25 * sq(a - 1.0) * sq(a) * sq(psi(0, A1)) -
            1.0 / 24.0 * a * (25.0 * cu(a) - 38.0 * sq(a) + 11.0 * a + 2.0) * psi(0, A1) +
            1.0 / 288.0 * n *
                (-300.0 * cu(a) + 78.0 * sq(a) * n + 606.0 * sq(a) - 28.0 * a * sq(n) -
                 162.0 * a * n - 410.0 * a + 9.0 * cu(n) + 50.0 * sq(n) + 111.0 * n +
                 118.0));

    rec("A12", sum_n(p4(k) * sq(psi(0, k + a))),
        1.0 / 54000.0 *
            (1800.0 *
                 (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a + 6.0 * p5(n) +
                  15.0 * p4(n) + 10.0 * cu(n) - n) *
                 sq(psi(0, An)) -
             60.0 *
                 (822.0 * p5(a) + 15.0 * p4(a) * (24.0 * n - 113.0) -
                  20.0 * cu(a) * (9.0 * sq(n) + 54.0 * n - 46.0) +
                  15.0 * sq(a) * (8.0 * cu(n) + 42.0 * sq(n) + 74.0 * n - 5.0) -
                  2.0 * a *
                      (45.0 * p4(n) + 240.0 * cu(n) + 420.0 * sq(n) + 225.0 * n - 14.0) +
                  72.0 * p5(n) + 405.0 * p4(n) + 770.0 * cu(n) + 525.0 * sq(n) +
                  28.0 * n - 30.0) *
                 psi(0, An) -
             1800.0 * (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a) * sq(psi(0, A1)) +
             60.0 *
                 (822.0 * p5(a) - 1695.0 * p4(a) + 920.0 * cu(a) - 75.0 * sq(a) +
                  28.0 * a - 30.0) *
                 psi(0, A1) +
             5640.0 * sq(a) * cu(n) - 13860.0 * cu(a) * sq(n) + 37710.0 * sq(a) * sq(n) +
             49320.0 * p4(a) * n - 126360.0 * cu(a) * n + 114270.0 * sq(a) * n -
             2430.0 * a * p4(n) - 15360.0 * a * cu(n) - 39480.0 * a * sq(n) -
             49050.0 * a * n + 864.0 * p5(n) + 5535.0 * p4(n) + 14590.0 * cu(n) +
             19725.0 * sq(n) + 11486.0 * n));

    // ---- sum k^c psi_0^3(k+a), c = 0..4 (A13-A17) ----
    rec("A13", sum_n(cu(psi(0, k + a))),
        -0.5 * psi(1, An) + 0.5 * psi(1, A1) + (a + n) * cu(psi(0, An)) -
            1.5 * (2.0 * a + 2.0 * n + 1.0) * sq(psi(0, An)) +
            3.0 * (2.0 * a + 2.0 * n + 1.0) * psi(0, An) - a * cu(psi(0, A1)) +
            1.5 * (2.0 * a + 1.0) * sq(psi(0, A1)) - 3.0 * (2.0 * a + 1.0) * psi(0, A1) -
            6.0 * n);

    rec("A14", sum_n(k * cu(psi(0, k + a))),
        0.25 * (2.0 * a - 1.0) * psi(1, An) + 0.25 * (-2.0 * a + 1.0) * psi(1, A1) +
            0.5 * (-sq(a) + a + sq(n) + n) * cu(psi(0, An)) +
            0.75 * (3.0 * sq(a) + 2.0 * a * n - a - sq(n) - 3.0 * n - 1.0) *
                sq(psi(0, An)) +
            0.125 *
                (-42.0 * sq(a) - 36.0 * a * n + 6.0 * a + 6.0 * sq(n) + 30.0 * n + 14.0) *
                psi(0, An) +
            0.5 * (a - 1.0) * a * cu(psi(0, A1)) +
            0.75 * (-3.0 * sq(a) + a + 1.0) * sq(psi(0, A1)) +
            0.25 * (21.0 * sq(a) - 3.0 * a - 7.0) * psi(0, A1) +
            0.125 * (42.0 * a * n - 3.0 * sq(n) - 27.0 * n));

    rec("A15", sum_n(sq(k) * cu(psi(0, k + a))),
        1.0 / 12.0 * (-6.0 * sq(a) + 6.0 * a - 1.0) * psi(1, An) +
            1.0 / 12.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * psi(1, A1) +
            1.0 / 6.0 * (2.0 * cu(a) - 3.0 * sq(a) + a + 2.0 * cu(n) + 3.0 * sq(n) + n) *
                cu(psi(0, An)) -
            1.0 / 12.0 *
                (22.0 * cu(a) + 12.0 * sq(a) * n - 21.0 * sq(a) - 6.0 * a * sq(n) -
                 24.0 * a * n - a + 4.0 * cu(n) + 15.0 * sq(n) + 17.0 * n + 3.0) *
                sq(psi(0, An)) +
            1.0 / 36.0 *
                (170.0 * cu(a) + 132.0 * sq(a) * n - 123.0 * sq(a) - 30.0 * a * sq(n) -
                 192.0 * a * n - 47.0 * a + 8.0 * cu(n) + 39.0 * sq(n) + 79.0 * n +
                 33.0) *
                psi(0, An) -
            1.0 / 6.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * cu(psi(0, A1)) +
            1.0 / 12.0 * (22.0 * cu(a) - 21.0 * sq(a) - a + 3.0) * sq(psi(0, A1)) -
            1.0 / 36.0 * (170.0 * cu(a) - 123.0 * sq(a) - 47.0 * a + 33.0) * psi(0, A1) +
            1.0 / 216.0 *
                (-1020.0 * sq(a) * n + 114.0 * a * sq(n) + 1248.0 * a * n -
                 16.0 * cu(n) - 105.0 * sq(n) - 365.0 * n));

    rec("A16", sum_n(cu(k) * cu(psi(0, k + a))),
        0.25 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * psi(1, An) +
            0.25 * a * (-2.0 * sq(a) + 3.0 * a - 1.0) * psi(1, A1) -
            0.25 * (p4(a) - 2.0 * cu(a) + sq(a) - p4(n) - 2.0 * cu(n) - sq(n)) *
                cu(psi(0, An)) +
            1.0 / 16.0 *
                (25.0 * p4(a) + 12.0 * cu(a) * n - 38.0 * cu(a) - 6.0 * sq(a) * sq(n) -
                 30.0 * sq(a) * n + 11.0 * sq(a) + 4.0 * a * cu(n) + 18.0 * a * sq(n) +
                 26.0 * a * n + 2.0 * a - 3.0 * p4(n) - 14.0 * cu(n) - 21.0 * sq(n) -
                 10.0 * n) *
                sq(psi(0, An)) -
            1.0 / 96.0 *
                (415.0 * p4(a) + 300.0 * cu(a) * n - 530.0 * cu(a) -
                 78.0 * sq(a) * sq(n) - 606.0 * sq(a) * n + 17.0 * sq(a) +
                 28.0 * a * cu(n) + 162.0 * a * sq(n) + 410.0 * a * n + 146.0 * a -
                 9.0 * p4(n) - 50.0 * cu(n) - 111.0 * sq(n) - 118.0 * n - 36.0) *
                psi(0, An) +
            0.25 * sq(a - 1.0) * sq(a) * cu(psi(0, A1)) -
            1.0 / 16.0 * a * (25.0 * cu(a) - 38.0 * sq(a) + 11.0 * a + 2.0) *
                sq(psi(0, A1)) +
            1.0 / 96.0 * (415.0 * p4(a) - 530.0 * cu(a) + 17.0 * sq(a) + 146.0 * a - 36.0) *
                psi(0, A1) +
            1.0 / 1152.0 *
                (4980.0 * cu(a) * n - 690.0 * sq(a) * sq(n) - 8850.0 * sq(a) * n +
                 148.0 * a * cu(n) + 1134.0 * a * sq(n) + 4790.0 * a * n - 27.0 * p4(n) -
                 182.0 * cu(n) - 525.0 * sq(n) - 850.0 * n));

    rec("A17", sum_n(p4(k) * cu(psi(0, k + a))),
        1.0 / 1080000.0 *
            (-18000.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * psi(1, An) +
             18000.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * psi(1, A1) +
             36000.0 *
                 (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a + 6.0 * p5(n) +
                  15.0 * p4(n) + 10.0 * cu(n) - n) *
                 cu(psi(0, An)) -
             1800.0 *
                 (822.0 * p5(a) + 15.0 * p4(a) * (24.0 * n - 113.0) -
                  20.0 * cu(a) * (9.0 * sq(n) + 54.0 * n - 46.0) +
                  15.0 * sq(a) * (8.0 * cu(n) + 42.0 * sq(n) + 74.0 * n - 5.0) -
                  2.0 * a *
                      (45.0 * p4(n) + 240.0 * cu(n) + 420.0 * sq(n) + 225.0 * n - 14.0) +
                  72.0 * p5(n) + 405.0 * p4(n) + 770.0 * cu(n) + 525.0 * sq(n) +
                  28.0 * n - 30.0) *
                 sq(psi(0, An)) +
             60.0 *
                 (72114.0 * p5(a) + 15.0 * p4(a) * (3288.0 * n - 8731.0) -
                  20.0 * cu(a) * (693.0 * sq(n) + 6318.0 * n - 2117.0) +
                  15.0 * sq(a) *
                      (376.0 * cu(n) + 2514.0 * sq(n) + 7618.0 * n + 2015.0) -
                  2.0 * a *
                      (1215.0 * p4(n) + 7680.0 * cu(n) + 19740.0 * sq(n) +
                       24525.0 * n + 7757.0) +
                  864.0 * p5(n) + 5535.0 * p4(n) + 14590.0 * cu(n) + 19725.0 * sq(n) +
                  11486.0 * n + 840.0) *
                 psi(0, An) -
             36000.0 * (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a) * cu(psi(0, A1)) +
             1800.0 *
                 (822.0 * p5(a) - 1695.0 * p4(a) + 920.0 * cu(a) + 28.0 * a -
                  75.0 * sq(a) - 30.0) *
                 sq(psi(0, A1)) -
             60.0 *
                 (72114.0 * p5(a) - 130965.0 * p4(a) + 42340.0 * cu(a) +
                  30225.0 * sq(a) - 15514.0 * a + 840.0) *
                 psi(0, A1) -
             178680.0 * sq(a) * cu(n) + 683820.0 * cu(a) * sq(n) -
             1561770.0 * sq(a) * sq(n) - 4326840.0 * p4(a) * n + 10021320.0 * cu(a) * n -
             7730490.0 * sq(a) * n + 49410.0 * a * p4(n) + 376320.0 * a * cu(n) +
             1250760.0 * a * sq(n) + 2386350.0 * a * n - 10368.0 * p5(n) -
             76545.0 * p4(n) - 239330.0 * cu(n) - 400575.0 * sq(n) - 331582.0 * n));

    // ---- sum k^c psi_1(k+a), c = 0..4 (A18-A22) ----
    rec("A18", sum_n(psi(1, k + a)),
        (a + n) * psi(1, An) - a * psi(1, A1) + psi(0, An) - psi(0, A1));

    rec("A19", sum_n(k * psi(1, k + a)),
        0.5 * ((-sq(a) + a + sq(n) + n) * psi(1, An) + (a - 1.0) * a * psi(1, A1) +
               (-2.0 * a + 1.0) * psi(0, An) + (2.0 * a - 1.0) * psi(0, A1) + n));

    rec("A20", sum_n(sq(k) * psi(1, k + a)),
        1.0 / 6.0 *
            ((2.0 * cu(a) - 3.0 * sq(a) + a + 2.0 * cu(n) + 3.0 * sq(n) + n) * psi(1, An) +
             a * (a - 1.0) * (-2.0 * a + 1.0) * psi(1, A1) +
             (6.0 * sq(a) - 6.0 * a + 1.0) * psi(0, An) +
             (-6.0 * sq(a) + 6.0 * a - 1.0) * psi(0, A1) - 4.0 * a * n + sq(n) +
             4.0 * n));

    rec("A21", sum_n(cu(k) * psi(1, k + a)),
        1.0 / 24.0 *
            (6.0 * (-p4(a) + 2.0 * cu(a) - sq(a) + p4(n) + 2.0 * cu(n) + sq(n)) *
                 psi(1, An) +
             6.0 * (p4(a) - 2.0 * cu(a) + sq(a)) * psi(1, A1) -
             12.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * psi(0, An) +
             12.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * psi(0, A1) + 18.0 * sq(a) * n -
             6.0 * a * sq(n) - 30.0 * a * n + 2.0 * cu(n) + 9.0 * sq(n) + 13.0 * n));

    rec("A22", sum_n(p4(k) * psi(1, k + a)),
        1.0 / 60.0 *
            ((12.0 * p5(a) - 30.0 * p4(a) + 20.0 * cu(a) - 2.0 * a + 12.0 * p5(n) +
              30.0 * p4(n) + 20.0 * cu(n) - 2.0 * n) *
                 psi(1, An) +
             (-12.0 * p5(a) + 30.0 * p4(a) - 20.0 * cu(a) + 2.0 * a) * psi(1, A1) +
             (60.0 * p4(a) - 120.0 * cu(a) + 60.0 * sq(a) - 2.0) * psi(0, An) +
             (-60.0 * p4(a) + 120.0 * cu(a) - 60.0 * sq(a) + 2.0) * psi(0, A1) +
             18.0 * sq(a) * sq(n) - 48.0 * cu(a) * n + 108.0 * sq(a) * n -
             8.0 * a * cu(n) - 42.0 * a * sq(n) - 74.0 * a * n + 3.0 * p4(n) +
             16.0 * cu(n) + 28.0 * sq(n) + 15.0 * n));

    // ---- sum k^c psi_0(k+a) psi_1(k+a), c = 0..4 (A23-A27) ----
    rec("A23", sum_n(psi(0, k + a) * psi(1, k + a)),
        (a + n) * psi(0, An) * psi(1, An) - a * psi(0, A1) * psi(1, A1) -
            0.5 * (2.0 * a + 2.0 * n + 1.0) * psi(1, An) +
            0.5 * (2.0 * a + 1.0) * psi(1, A1) + 0.5 * sq(psi(0, An)) - psi(0, An) -
            0.5 * sq(psi(0, A1)) + psi(0, A1));

    rec("A24", sum_n(k * psi(0, k + a) * psi(1, k + a)),
        0.25 *
            (2.0 * (-sq(a) + a + sq(n) + n) * psi(0, An) * psi(1, An) +
             2.0 * a * (a - 1.0) * psi(0, A1) * psi(1, A1) -
             (-3.0 * sq(a) - 2.0 * a * n + a + sq(n) + 3.0 * n + 1.0) * psi(1, An) +
             (-3.0 * sq(a) + a + 1.0) * psi(1, A1) + (1.0 - 2.0 * a) * sq(psi(0, An)) +
             (6.0 * a + 2.0 * n - 1.0) * psi(0, An) + (2.0 * a - 1.0) * sq(psi(0, A1)) +
             (1.0 - 6.0 * a) * psi(0, A1) - 3.0 * n));

    rec("A25", sum_n(sq(k) * psi(0, k + a) * psi(1, k + a)),
        1.0 / 36.0 *
            (6.0 * (2.0 * cu(a) - 3.0 * sq(a) + a + 2.0 * cu(n) + 3.0 * sq(n) + n) *
                 psi(0, An) * psi(1, An) -
             6.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * psi(0, A1) * psi(1, A1) +
             (-22.0 * cu(a) - 12.0 * sq(a) * n + 21.0 * sq(a) + 6.0 * a * sq(n) +
              24.0 * a * n + a - 4.0 * cu(n) - 15.0 * sq(n) - 17.0 * n - 3.0) *
                 psi(1, An) +
             (22.0 * cu(a) - 21.0 * sq(a) - a + 3.0) * psi(1, A1) +
             3.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * sq(psi(0, An)) +
             (-66.0 * sq(a) - 24.0 * a * n + 42.0 * a + 6.0 * sq(n) + 24.0 * n + 1.0) *
                 psi(0, An) -
             3.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * sq(psi(0, A1)) -
             (-66.0 * sq(a) + 42.0 * a + 1.0) * psi(0, A1) + 44.0 * a * n - 5.0 * sq(n) -
             32.0 * n));

    rec("A26", sum_n(cu(k) * psi(0, k + a) * psi(1, k + a)),
        1.0 / 288.0 *
            (-72.0 * (p4(a) - 2.0 * cu(a) + sq(a) - p4(n) - 2.0 * cu(n) - sq(n)) *
                 psi(0, An) * psi(1, An) +
             72.0 * sq(a - 1.0) * sq(a) * psi(0, A1) * psi(1, A1) +
             (150.0 * p4(a) + 72.0 * cu(a) * n - 228.0 * cu(a) - 36.0 * sq(a) * sq(n) -
              180.0 * sq(a) * n + 66.0 * sq(a) + 24.0 * a * cu(n) + 108.0 * a * sq(n) +
              156.0 * a * n + 12.0 * a - 18.0 * p4(n) - 84.0 * cu(n) - 126.0 * sq(n) -
              60.0 * n) *
                 psi(1, An) +
             (-150.0 * p4(a) + 228.0 * cu(a) - 66.0 * sq(a) - 12.0 * a) * psi(1, A1) -
             72.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * sq(psi(0, An)) -
             12.0 *
                 (-50.0 * cu(a) - 18.0 * sq(a) * n + 57.0 * sq(a) + 6.0 * a * sq(n) +
                  30.0 * a * n - 11.0 * a - 2.0 * cu(n) - 9.0 * sq(n) - 13.0 * n - 1.0) *
                 psi(0, An) +
             72.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * sq(psi(0, A1)) +
             12.0 * (-50.0 * cu(a) + 57.0 * sq(a) - 11.0 * a - 1.0) * psi(0, A1) -
             450.0 * sq(a) * n + 78.0 * a * sq(n) + 606.0 * a * n - 14.0 * cu(n) -
             81.0 * sq(n) - 205.0 * n));

    rec("A27", sum_n(p4(k) * psi(0, k + a) * psi(1, k + a)),
        1.0 / 3600.0 *
            (120.0 *
                 (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a + 6.0 * p5(n) +
                  15.0 * p4(n) + 10.0 * cu(n) - n) *
                 psi(0, An) * psi(1, An) -
             120.0 * (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a) * psi(0, A1) *
                 psi(1, A1) -
             2.0 *
                 (822.0 * p5(a) + 15.0 * (24.0 * n - 113.0) * p4(a) -
                  20.0 * cu(a) * (9.0 * sq(n) + 54.0 * n - 46.0) +
                  15.0 * sq(a) * (8.0 * cu(n) + 42.0 * sq(n) + 74.0 * n - 5.0) -
                  2.0 * a *
                      (45.0 * p4(n) + 240.0 * cu(n) + 420.0 * sq(n) + 225.0 * n - 14.0) +
                  72.0 * p5(n) + 405.0 * p4(n) + 770.0 * cu(n) + 525.0 * sq(n) +
                  28.0 * n - 30.0) *
                 psi(1, An) +
             2.0 *
                 (822.0 * p5(a) - 1695.0 * p4(a) + 920.0 * cu(a) - 75.0 * sq(a) +
                  28.0 * a - 30.0) *
                 psi(1, A1) +
             60.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * sq(psi(0, An)) -
             4.0 *
                 (2055.0 * p4(a) + 30.0 * cu(a) * (24.0 * n - 113.0) -
                  30.0 * sq(a) * (9.0 * sq(n) + 54.0 * n - 46.0) +
                  15.0 * a * (8.0 * cu(n) + 42.0 * sq(n) + 74.0 * n - 5.0) -
                  45.0 * p4(n) - 240.0 * cu(n) - 420.0 * sq(n) - 225.0 * n + 14.0) *
                 psi(0, An) -
             60.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * sq(psi(0, A1)) +
             4.0 * (2055.0 * p4(a) - 3390.0 * cu(a) + 1380.0 * sq(a) - 75.0 * a + 14.0) *
                 psi(0, A1) -
             1386.0 * sq(a) * sq(n) + 6576.0 * cu(a) * n - 12636.0 * sq(a) * n +
             376.0 * a * cu(n) + 2514.0 * a * sq(n) + 7618.0 * a * n - 81.0 * p4(n) -
             512.0 * cu(n) - 1316.0 * sq(n) - 1635.0 * n));

    // ---- sum k^c psi_0^2(k+a) psi_1(k+a), c = 0..4 (A28-A32) ----
    rec("A28", sum_n(sq(psi(0, k + a)) * psi(1, k + a)),
        1.0 / 6.0 *
            (-psi(2, An) + psi(2, A1) + 6.0 * (a + n) * sq(psi(0, An)) * psi(1, An) -
             6.0 * a * sq(psi(0, A1)) * psi(1, A1) -
             6.0 * (2.0 * a + 2.0 * n + 1.0) * psi(0, An) * psi(1, An) +
             6.0 * (2.0 * a + 1.0) * psi(0, A1) * psi(1, A1) +
             6.0 * (2.0 * a + 2.0 * n + 1.0) * psi(1, An) -
             6.0 * (2.0 * a + 1.0) * psi(1, A1) + 2.0 * cu(psi(0, An)) -
             6.0 * sq(psi(0, An)) + 12.0 * psi(0, An) - 2.0 * cu(psi(0, A1)) +
             6.0 * sq(psi(0, A1)) - 12.0 * psi(0, A1)));

    rec("A29", sum_n(k * sq(psi(0, k + a)) * psi(1, k + a)),
        1.0 / 12.0 *
            ((2.0 * a - 1.0) * psi(2, An) - (2.0 * a - 1.0) * psi(2, A1) +
             6.0 * (-sq(a) + a + sq(n) + n) * sq(psi(0, An)) * psi(1, An) +
             6.0 * a * (a - 1.0) * sq(psi(0, A1)) * psi(1, A1) +
             6.0 * (3.0 * sq(a) + a * (2.0 * n - 1.0) - sq(n) - 3.0 * n - 1.0) *
                 psi(0, An) * psi(1, An) +
             6.0 * (-3.0 * sq(a) + a + 1.0) * psi(0, A1) * psi(1, A1) +
             3.0 * (-7.0 * sq(a) - 6.0 * a * n + a + sq(n) + 5.0 * n + 3.0) * psi(1, An) +
             3.0 * (7.0 * sq(a) - a - 3.0) * psi(1, A1) -
             2.0 * (2.0 * a - 1.0) * cu(psi(0, An)) +
             3.0 * (6.0 * a + 2.0 * n - 1.0) * sq(psi(0, An)) -
             3.0 * (14.0 * a + 6.0 * n - 1.0) * psi(0, An) +
             2.0 * (2.0 * a - 1.0) * cu(psi(0, A1)) -
             3.0 * (6.0 * a - 1.0) * sq(psi(0, A1)) +
             3.0 * (14.0 * a - 1.0) * psi(0, A1) + 21.0 * n));

    rec("A30", sum_n(sq(k) * sq(psi(0, k + a)) * psi(1, k + a)),
        1.0 / 108.0 *
            (-3.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * psi(2, An) +
             3.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * psi(2, A1) +
             18.0 * (2.0 * cu(a) - 3.0 * sq(a) + a + 2.0 * cu(n) + 3.0 * sq(n) + n) *
                 sq(psi(0, An)) * psi(1, An) -
             18.0 * (2.0 * cu(a) - 3.0 * sq(a) + a) * sq(psi(0, A1)) * psi(1, A1) -
             6.0 *
                 (12.0 * sq(a) * n + 22.0 * cu(a) - 21.0 * sq(a) - 6.0 * a * sq(n) -
                  24.0 * a * n - a + 4.0 * cu(n) + 15.0 * sq(n) + 17.0 * n + 3.0) *
                 psi(0, An) * psi(1, An) +
             6.0 * (22.0 * cu(a) - 21.0 * sq(a) - a + 3.0) * psi(0, A1) * psi(1, A1) +
             (132.0 * sq(a) * n + 170.0 * cu(a) - 123.0 * sq(a) - 30.0 * a * sq(n) -
              192.0 * a * n - 83.0 * a + 8.0 * cu(n) + 39.0 * sq(n) + 79.0 * n + 51.0) *
                 psi(1, An) +
             (-170.0 * cu(a) + 123.0 * sq(a) + 83.0 * a - 51.0) * psi(1, A1) +
             6.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * cu(psi(0, An)) +
             3.0 *
                 (-66.0 * sq(a) - 24.0 * a * n + 42.0 * a + 6.0 * sq(n) + 24.0 * n +
                  1.0) *
                 sq(psi(0, An)) +
             (510.0 * sq(a) + 264.0 * a * n - 246.0 * a - 30.0 * sq(n) - 192.0 * n -
              47.0) *
                 psi(0, An) -
             6.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * cu(psi(0, A1)) +
             3.0 * (66.0 * sq(a) - 42.0 * a - 1.0) * sq(psi(0, A1)) +
             (-510.0 * sq(a) + 246.0 * a + 47.0) * psi(0, A1) - 340.0 * a * n +
             19.0 * sq(n) + 208.0 * n));

    rec("A31", sum_n(cu(k) * sq(psi(0, k + a)) * psi(1, k + a)),
        1.0 / 1728.0 *
            (144.0 * (2.0 * cu(a) - 3.0 * sq(a) + a) * psi(2, An) -
             144.0 * (2.0 * cu(a) - 3.0 * sq(a) + a) * psi(2, A1) -
             432.0 * (p4(a) - 2.0 * cu(a) + sq(a) - p4(n) - 2.0 * cu(n) - sq(n)) *
                 sq(psi(0, An)) * psi(1, An) +
             432.0 * (p4(a) - 2.0 * cu(a) + sq(a)) * sq(psi(0, A1)) * psi(1, A1) +
             72.0 *
                 (-6.0 * sq(a) * sq(n) + 12.0 * cu(a) * n - 30.0 * sq(a) * n +
                  25.0 * p4(a) - 38.0 * cu(a) + 11.0 * sq(a) + 4.0 * a * cu(n) +
                  18.0 * a * sq(n) + 26.0 * a * n + 2.0 * a - 3.0 * p4(n) -
                  14.0 * cu(n) - 21.0 * sq(n) - 10.0 * n) *
                 psi(0, An) * psi(1, An) -
             72.0 * (25.0 * p4(a) - 38.0 * cu(a) + 11.0 * sq(a) + 2.0 * a) * psi(0, A1) *
                 psi(1, A1) -
             6.0 *
                 (-78.0 * sq(a) * sq(n) + 300.0 * cu(a) * n - 606.0 * sq(a) * n +
                  415.0 * p4(a) - 530.0 * cu(a) - 127.0 * sq(a) + 28.0 * a * cu(n) +
                  162.0 * a * sq(n) + 410.0 * a * n + 290.0 * a - 9.0 * p4(n) -
                  50.0 * cu(n) - 111.0 * sq(n) - 118.0 * n - 60.0) *
                 psi(1, An) +
             6.0 * (415.0 * p4(a) - 530.0 * cu(a) - 127.0 * sq(a) + 290.0 * a - 60.0) *
                 psi(1, A1) -
             288.0 * (2.0 * cu(a) - 3.0 * sq(a) + a) * cu(psi(0, An)) +
             72.0 *
                 (18.0 * sq(a) * n + 50.0 * cu(a) - 57.0 * sq(a) - 6.0 * a * sq(n) -
                  30.0 * a * n + 11.0 * a + 2.0 * cu(n) + 9.0 * sq(n) + 13.0 * n + 1.0) *
                 sq(psi(0, An)) -
             12.0 *
                 (450.0 * sq(a) * n + 830.0 * cu(a) - 795.0 * sq(a) - 78.0 * a * sq(n) -
                  606.0 * a * n + 17.0 * a + 14.0 * cu(n) + 81.0 * sq(n) + 205.0 * n +
                  73.0) *
                 psi(0, An) +
             288.0 * (2.0 * cu(a) - 3.0 * sq(a) + a) * cu(psi(0, A1)) -
             72.0 * (50.0 * cu(a) - 57.0 * sq(a) + 11.0 * a + 1.0) * sq(psi(0, A1)) +
             12.0 * (830.0 * cu(a) - 795.0 * sq(a) + 17.0 * a + 73.0) * psi(0, A1) +
             7470.0 * sq(a) * n - 690.0 * a * sq(n) - 8850.0 * a * n + 74.0 * cu(n) +
             567.0 * sq(n) + 2395.0 * n));

    rec("A32", sum_n(p4(k) * sq(psi(0, k + a)) * psi(1, k + a)),
        1.0 / 108000.0 *
            (-600.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * psi(2, An) +
             600.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * psi(2, A1) +
             3600.0 *
                 (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a + 6.0 * p5(n) +
                  15.0 * p4(n) + 10.0 * cu(n) - n) *
                 sq(psi(0, An)) * psi(1, An) -
             3600.0 * (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a) * sq(psi(0, A1)) *
                 psi(1, A1) -
             120.0 *
                 (822.0 * p5(a) + 15.0 * p4(a) * (24.0 * n - 113.0) -
                  20.0 * cu(a) * (9.0 * sq(n) + 54.0 * n - 46.0) +
                  15.0 * sq(a) * (8.0 * cu(n) + 42.0 * sq(n) + 74.0 * n - 5.0) -
                  2.0 * a *
                      (45.0 * p4(n) + 240.0 * cu(n) + 420.0 * sq(n) + 225.0 * n - 14.0) +
                  72.0 * p5(n) + 405.0 * p4(n) + 770.0 * cu(n) + 525.0 * sq(n) +
                  28.0 * n - 30.0) *
                 psi(0, An) * psi(1, An) +
             120.0 *
                 (822.0 * p5(a) - 1695.0 * p4(a) + 920.0 * cu(a) - 75.0 * sq(a) +
                  28.0 * a - 30.0) *
                 psi(0, A1) * psi(1, A1) +
             2.0 *
                 (72114.0 * p5(a) + 15.0 * p4(a) * (3288.0 * n - 8731.0) -
                  20.0 * cu(a) * (693.0 * sq(n) + 6318.0 * n - 317.0) +
                  15.0 * sq(a) *
                      (376.0 * cu(n) + 2514.0 * sq(n) + 7618.0 * n + 5615.0) -
                  2.0 * a *
                      (1215.0 * p4(n) + 7680.0 * cu(n) + 19740.0 * sq(n) +
                       24525.0 * n + 16757.0) +
                  864.0 * p5(n) + 5535.0 * p4(n) + 14590.0 * cu(n) + 19725.0 * sq(n) +
                  11486.0 * n + 840.0) *
                 psi(1, An) -
             2.0 *
                 (72114.0 * p5(a) - 130965.0 * p4(a) + 6340.0 * cu(a) +
                  84225.0 * sq(a) - 33514.0 * a + 840.0) *
                 psi(1, A1) +
             1200.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) *
                 cu(psi(0, An)) -
             120.0 *
                 (2055.0 * p4(a) + 30.0 * cu(a) * (24.0 * n - 113.0) -
                  30.0 * sq(a) * (9.0 * sq(n) + 54.0 * n - 46.0) +
                  15.0 * a * (8.0 * cu(n) + 42.0 * sq(n) + 74.0 * n - 5.0) -
                  45.0 * p4(n) - 240.0 * cu(n) - 420.0 * sq(n) - 225.0 * n + 14.0) *
                 sq(psi(0, An)) +
             4.0 *
                 (180285.0 * p4(a) + 30.0 * cu(a) * (3288.0 * n - 8731.0) -
                  30.0 * sq(a) * (693.0 * sq(n) + 6318.0 * n - 2117.0) +
                  15.0 * a * (376.0 * cu(n) + 2514.0 * sq(n) + 7618.0 * n + 2015.0) -
                  1215.0 * p4(n) - 7680.0 * cu(n) - 19740.0 * sq(n) - 24525.0 * n -
                  7757.0) *
                 psi(0, An) -
             1200.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) *
                 cu(psi(0, A1)) +
             120.0 *
                 (2055.0 * p4(a) - 3390.0 * cu(a) + 1380.0 * sq(a) - 75.0 * a + 14.0) *
                 sq(psi(0, A1)) -
             4.0 *
                 (180285.0 * p4(a) - 261930.0 * cu(a) + 63510.0 * sq(a) + 30225.0 * a -
                  7757.0) *
                 psi(0, A1) +
             68382.0 * sq(a) * sq(n) - 576912.0 * cu(a) * n + 1002132.0 * sq(a) * n -
             11912.0 * a * cu(n) - 104118.0 * a * sq(n) - 515366.0 * a * n +
             1647.0 * p4(n) + 12544.0 * cu(n) + 41692.0 * sq(n) + 79545.0 * n));

    // ---- sum k^c psi_2(k+a), c = 0..4 (A33-A37) ----
    rec("A33", sum_n(psi(2, k + a)),
        (a + n) * psi(2, An) - a * psi(2, A1) + 2.0 * psi(1, An) - 2.0 * psi(1, A1));

    rec("A34", sum_n(k * psi(2, k + a)),
        0.5 * (-sq(a) + a + sq(n) + n) * psi(2, An) + 0.5 * a * (a - 1.0) * psi(2, A1) +
            (-2.0 * a + 1.0) * psi(1, An) + (2.0 * a - 1.0) * psi(1, A1) - psi(0, An) +
            psi(0, A1));

    rec("A35", sum_n(sq(k) * psi(2, k + a)),
        1.0 / 6.0 *
            ((2.0 * cu(a) - 3.0 * sq(a) + a + 2.0 * cu(n) + 3.0 * sq(n) + n) * psi(2, An) +
             a * (-2.0 * sq(a) + 3.0 * a - 1.0) * psi(2, A1) +
             2.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * psi(1, An) +
             2.0 * (-6.0 * sq(a) + 6.0 * a - 1.0) * psi(1, A1) +
             6.0 * (2.0 * a - 1.0) * psi(0, An) + 6.0 * (-2.0 * a + 1.0) * psi(0, A1) -
             4.0 * n));

    rec("A36", sum_n(cu(k) * psi(2, k + a)),
        0.25 *
            ((-p4(a) + 2.0 * cu(a) - sq(a) + p4(n) + 2.0 * cu(n) + sq(n)) * psi(2, An) +
             sq(a - 1.0) * sq(a) * psi(2, A1) +
             4.0 * a * (-2.0 * sq(a) + 3.0 * a - 1.0) * psi(1, An) +
             4.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * psi(1, A1) -
             2.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * psi(0, An) +
             2.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * psi(0, A1) + 6.0 * a * n - sq(n) -
             5.0 * n));

    rec("A37", sum_n(p4(k) * psi(2, k + a)),
        1.0 / 30.0 *
            ((6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a + 6.0 * p5(n) +
              15.0 * p4(n) + 10.0 * cu(n) - n) *
                 psi(2, An) +
             (-6.0 * p5(a) + 15.0 * p4(a) - 10.0 * cu(a) + a) * psi(2, A1) +
             (60.0 * p4(a) - 120.0 * cu(a) + 60.0 * sq(a) - 2.0) * psi(1, An) +
             (-60.0 * p4(a) + 120.0 * cu(a) - 60.0 * sq(a) + 2.0) * psi(1, A1) +
             (120.0 * cu(a) - 180.0 * sq(a) + 60.0 * a) * psi(0, An) +
             (-120.0 * cu(a) + 180.0 * sq(a) - 60.0 * a) * psi(0, A1) -
             n * (72.0 * sq(a) - 18.0 * a * (n + 6.0) + 4.0 * sq(n) + 21.0 * n + 37.0)));

    (void)m;
}


#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC pop_options
#endif

}  // namespace qent::detail
