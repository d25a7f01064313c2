#pragma once

// First-type semi-closed identities A38-A80. Their right sides carry the
// unsimplifiable inner sums (sum psi_0(k+a)/k and relatives) alongside closed
// terms; A78-A80 close sums of the second kind (arguments k+a in the
// denominator).

#include "qent/identities.hpp"

namespace qent::detail {

// The expression-building functions below are enormous after inlining and
// make the optimizer crawl; they run once at startup, so opt them out.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC push_options
#pragma GCC optimize("O0")
#endif

inline void build_catalog_a_semi(std::vector<IdentityRecord>& out) {
    using namespace expr;
    const Ex n = make(Op::sym_n), a = make(Op::sym_a), k = make(Op::sym_k);
    const Ex An = a + n + 1.0;
    const Ex A1 = a + 1.0;
    const Ex N1 = n + 1.0;
    const Ex one = num(1.0);

    // recurring unsimplifiable sums
    const Ex Sp0k = sum_n(psi(0, k + a) / k);
    const Ex Sp0k2 = sum_n(psi(0, k + a) / sq(k));
    const Ex Sp0sqk = sum_n(sq(psi(0, k + a)) / k);
    const Ex Sp0p0k = sum_n(psi(0, k + a) * psi(0, k) / k);
    const Ex Sp1k = sum_n(psi(1, k + a) / k);
    const Ex Sp1ka = sum_n(psi(1, k + a) / (k + a));

    const char* psi_note = "printed as psi(a+k) without subscript; read as psi_0";

    auto rec = [&out](const char* id, Ex lhs, Ex rhs, const char* notes = "") {
        out.push_back({id, IdentityFamily::first_type, false, notes, lhs, rhs});
    };

    // ---- sum k^c psi_0(k+a) psi_0(k), c = 0..4 (A38-A42) ----
    rec("A38", sum_n(psi(0, k + a) * psi(0, k)),
        -a * Sp0k + (a + n) * psi(0, N1) * psi(0, An) - (a + n) * psi(0, An) -
            a * psi(0, one) * psi(0, A1) + a * psi(0, A1) - (n + 1.0) * psi(0, N1) +
            psi(0, one) + 2.0 * n,
        psi_note);

    rec("A39", sum_n(k * psi(0, k + a) * psi(0, k)),
        0.5 * a * (a - 1.0) * Sp0k +
            0.25 *
                ((-2.0 * sq(a) + 2.0 * a + 2.0 * sq(n) + 2.0 * n) * psi(0, N1) *
                     psi(0, An) +
                 (sq(a) - 3.0 * a - sq(n) - 3.0 * n) * psi(0, An) +
                 (2.0 * sq(a) - 2.0 * a) * psi(0, one) * psi(0, A1) +
                 (2.0 * a * n + 2.0 * a - sq(n) - 3.0 * n - 2.0) * psi(0, N1) -
                 (sq(a) - 3.0 * a) * psi(0, A1) - (2.0 * a - 2.0) * psi(0, one) -
                 3.0 * a * n + sq(n) + 5.0 * n),
        psi_note);

    rec("A40", sum_n(sq(k) * psi(0, k + a) * psi(0, k)),
        -1.0 / 6.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * Sp0k +
            1.0 / 108.0 *
                ((36.0 * cu(a) - 54.0 * sq(a) + 18.0 * a + 36.0 * cu(n) + 54.0 * sq(n) +
                  18.0 * n) *
                     psi(0, N1) * psi(0, An) +
                 (-12.0 * cu(a) + 45.0 * sq(a) - 51.0 * a - 12.0 * cu(n) -
                  45.0 * sq(n) - 51.0 * n) *
                     psi(0, An) +
                 (-36.0 * cu(a) + 54.0 * sq(a) - 18.0 * a) * psi(0, one) * psi(0, A1) +
                 (12.0 * cu(a) - 45.0 * sq(a) + 51.0 * a) * psi(0, A1) +
                 (-36.0 * sq(a) * n - 36.0 * sq(a) + 18.0 * a * sq(n) + 72.0 * a * n +
                  54.0 * a - 12.0 * cu(n) - 51.0 * n - 45.0 * sq(n) - 18.0) *
                     psi(0, N1) +
                 (36.0 * sq(a) - 54.0 * a + 18.0) * psi(0, one) + 48.0 * sq(a) * n -
                 15.0 * a * sq(n) - 96.0 * a * n + 8.0 * cu(n) + 39.0 * sq(n) +
                 79.0 * n),
        psi_note);

    rec("A41", sum_n(cu(k) * psi(0, k + a) * psi(0, k)),
        0.25 * sq(a) * sq(a - 1.0) * Sp0k +
            1.0 / 288.0 *
                ((-72.0 * p4(a) + 144.0 * cu(a) - 72.0 * sq(a) + 72.0 * p4(n) +
                  144.0 * cu(n) + 72.0 * sq(n)) *
                     psi(0, N1) * psi(0, An) +
                 (18.0 * p4(a) - 84.0 * cu(a) + 126.0 * sq(a) - 60.0 * a -
                  18.0 * p4(n) - 84.0 * cu(n) - 126.0 * sq(n) - 60.0 * n) *
                     psi(0, An) +
                 72.0 * sq(a - 1.0) * sq(a) * psi(0, one) * psi(0, A1) +
                 6.0 * a * (-3.0 * cu(a) + 14.0 * sq(a) - 21.0 * a + 10.0) * psi(0, A1) +
                 (-36.0 * sq(a) * sq(n) + 72.0 * cu(a) * n - 180.0 * sq(a) * n +
                  72.0 * cu(a) - 144.0 * sq(a) + 24.0 * a * cu(n) + 108.0 * a * sq(n) +
                  156.0 * a * n + 72.0 * a - 18.0 * p4(n) - 84.0 * cu(n) -
                  126.0 * sq(n) - 60.0 * n) *
                     psi(0, N1) +
                 (-72.0 * cu(a) + 144.0 * sq(a) - 72.0 * a) * psi(0, one) +
                 27.0 * sq(a) * sq(n) - 90.0 * cu(a) * n + 219.0 * sq(a) * n -
                 14.0 * a * cu(n) - 81.0 * a * sq(n) - 205.0 * a * n + 9.0 * p4(n) +
                 50.0 * cu(n) + 111.0 * sq(n) + 118.0 * n),
        psi_note);

    rec("A42", sum_n(p4(k) * psi(0, k + a) * psi(0, k)),
        -1.0 / 30.0 * a * (6.0 * p4(a) - 15.0 * cu(a) + 10.0 * sq(a) - 1.0) * Sp0k +
            1.0 / 1800.0 *
                ((360.0 * p5(a) - 900.0 * p4(a) + 600.0 * cu(a) - 60.0 * a +
                  360.0 * p5(n) + 900.0 * p4(n) - 60.0 * n + 600.0 * cu(n)) *
                     psi(0, N1) * psi(0, An) +
                 (-72.0 * p5(a) + 405.0 * p4(a) - 770.0 * cu(a) + 525.0 * sq(a) -
                  28.0 * a - 72.0 * p5(n) - 405.0 * p4(n) - 770.0 * cu(n) -
                  525.0 * sq(n) - 28.0 * n) *
                     psi(0, An) +
                 (-360.0 * p5(a) + 900.0 * p4(a) - 600.0 * cu(a) + 60.0 * a) *
                     psi(0, one) * psi(0, A1) +
                 (72.0 * p5(a) - 405.0 * p4(a) + 770.0 * cu(a) - 525.0 * sq(a) +
                  28.0 * a) *
                     psi(0, A1) +
                 (-120.0 * sq(a) * cu(n) + 180.0 * cu(a) * sq(n) -
                  630.0 * sq(a) * sq(n) - 360.0 * p4(a) * n + 1080.0 * cu(a) * n -
                  1110.0 * sq(a) * n - 360.0 * p4(a) + 900.0 * cu(a) - 600.0 * sq(a) +
                  90.0 * a * p4(n) + 480.0 * a * cu(n) + 840.0 * a * sq(n) +
                  450.0 * a * n - 72.0 * p5(n) - 405.0 * p4(n) - 770.0 * cu(n) -
                  525.0 * sq(n) - 28.0 * n + 60.0) *
                     psi(0, N1) +
                 (360.0 * p4(a) - 900.0 * cu(a) + 600.0 * sq(a) - 60.0) * psi(0, one)) +
            1.0 / 54000.0 * n *
                (1920.0 * sq(a) * sq(n) - 3780.0 * cu(a) * n + 13005.0 * sq(a) * n +
                 12960.0 * p4(a) - 37530.0 * cu(a) + 40485.0 * sq(a) -
                 1215.0 * a * cu(n) - 7680.0 * a * sq(n) - 19740.0 * a * n - 24525.0 * a +
                 864.0 * p4(n) + 5535.0 * cu(n) + 14590.0 * sq(n) + 19725.0 * n +
                 11486.0),
        psi_note);

    // ---- sum k^c psi_0(k+a) psi_0^2(k), c = 0..4 (A43-A47) ----
    rec("A43", sum_n(psi(0, k + a) * sq(psi(0, k))),
        -2.0 * a * Sp0p0k - a * Sp0k2 + (2.0 * a - 1.0) * Sp0k +
            (a + n) * sq(psi(0, N1)) * psi(0, An) -
            (2.0 * a + 2.0 * n) * psi(0, N1) * psi(0, An) +
            (2.0 * a + 2.0 * n) * psi(0, An) - a * sq(psi(0, one)) * psi(0, A1) +
            2.0 * a * psi(0, one) * psi(0, A1) - 2.0 * a * psi(0, A1) -
            (n + 1.0) * sq(psi(0, N1)) + (4.0 * n + 3.0) * psi(0, N1) +
            sq(psi(0, one)) - 3.0 * psi(0, one) - 6.0 * n);

    rec("A44", sum_n(k * psi(0, k + a) * sq(psi(0, k))),
        (sq(a) - a) * Sp0p0k + 0.5 * (sq(a) - a) * Sp0k2 +
            0.5 * (-sq(a) + 3.0 * a - 1.0) * Sp0k +
            0.125 *
                ((-4.0 * sq(a) + 4.0 * a + 4.0 * sq(n) + 4.0 * n) * sq(psi(0, N1)) *
                     psi(0, An) +
                 (4.0 * sq(a) - 12.0 * a - 4.0 * sq(n) - 12.0 * n) * psi(0, N1) *
                     psi(0, An) +
                 (4.0 * sq(a) - 4.0 * a) * sq(psi(0, one)) * psi(0, A1) +
                 (-2.0 * sq(a) + 10.0 * a + 2.0 * sq(n) + 10.0 * n) * psi(0, An) +
                 (12.0 * a - 4.0 * sq(a)) * psi(0, one) * psi(0, A1) +
                 (2.0 * sq(a) - 10.0 * a) * psi(0, A1) +
                 (-12.0 * a * n - 8.0 * a + 4.0 * sq(n) + 20.0 * n + 14.0) * psi(0, N1) +
                 (4.0 * a * n + 4.0 * a - 2.0 * sq(n) - 6.0 * n - 4.0) * sq(psi(0, N1)) +
                 (4.0 - 4.0 * a) * sq(psi(0, one)) + (8.0 * a - 14.0) * psi(0, one) +
                 14.0 * a * n - 3.0 * sq(n) - 27.0 * n));

    rec("A45", sum_n(sq(k) * psi(0, k + a) * sq(psi(0, k))),
        -1.0 / 3.0 * (2.0 * cu(a) - 3.0 * sq(a) + a) * Sp0p0k -
            1.0 / 6.0 * (2.0 * cu(a) - 3.0 * sq(a) + a) * Sp0k2 +
            1.0 / 18.0 * (4.0 * cu(a) - 15.0 * sq(a) + 17.0 * a - 3.0) * Sp0k +
            1.0 / 216.0 *
                ((72.0 * cu(a) - 108.0 * sq(a) + 36.0 * a + 72.0 * cu(n) +
                  108.0 * sq(n) + 36.0 * n) *
                     sq(psi(0, N1)) * psi(0, An) +
                 (-48.0 * cu(a) + 180.0 * sq(a) - 204.0 * a - 48.0 * cu(n) -
                  180.0 * sq(n) - 204.0 * n) *
                     psi(0, N1) * psi(0, An) +
                 (16.0 * cu(a) - 78.0 * sq(a) + 158.0 * a + 16.0 * cu(n) +
                  78.0 * sq(n) + 158.0 * n) *
                     psi(0, An) +
                 (-72.0 * cu(a) + 108.0 * sq(a) - 36.0 * a) * sq(psi(0, one)) *
                     psi(0, A1) +
                 (48.0 * cu(a) - 180.0 * sq(a) + 204.0 * a) * psi(0, one) * psi(0, A1) +
                 (-16.0 * cu(a) + 78.0 * sq(a) - 158.0 * a) * psi(0, A1) +
                 (-72.0 * sq(a) * n - 72.0 * sq(a) + 36.0 * a * sq(n) + 144.0 * a * n +
                  108.0 * a - 24.0 * cu(n) - 90.0 * sq(n) - 102.0 * n - 36.0) *
                     sq(psi(0, N1)) +
                 (192.0 * sq(a) * n + 120.0 * sq(a) - 60.0 * a * sq(n) - 384.0 * a * n -
                  252.0 * a + 32.0 * cu(n) + 156.0 * sq(n) + 316.0 * n + 198.0) *
                     psi(0, N1) +
                 (72.0 * sq(a) - 108.0 * a + 36.0) * sq(psi(0, one)) +
                 (-120.0 * sq(a) + 252.0 * a - 198.0) * psi(0, one) -
                 208.0 * sq(a) * n + 38.0 * a * sq(n) + 416.0 * a * n - 16.0 * cu(n) -
                 105.0 * sq(n) - 365.0 * n));

    rec("A46", sum_n(cu(k) * psi(0, k + a) * sq(psi(0, k))),
        0.5 * (p4(a) - 2.0 * cu(a) + sq(a)) * Sp0p0k +
            0.25 * (p4(a) - 2.0 * cu(a) + sq(a)) * Sp0k2 -
            a / 24.0 * (3.0 * cu(a) - 14.0 * sq(a) + 21.0 * a - 10.0) * Sp0k +
            1.0 / 3456.0 *
                ((-864.0 * p4(a) + 1728.0 * cu(a) - 864.0 * sq(a) + 864.0 * p4(n) +
                  1728.0 * cu(n) + 864.0 * sq(n)) *
                     sq(psi(0, N1)) * psi(0, An) +
                 (432.0 * p4(a) - 2016.0 * cu(a) + 3024.0 * sq(a) - 1440.0 * a -
                  432.0 * p4(n) - 2016.0 * cu(n) - 3024.0 * sq(n) - 1440.0 * n) *
                     psi(0, N1) * psi(0, An) +
                 (-108.0 * p4(a) + 600.0 * cu(a) - 1332.0 * sq(a) + 1416.0 * a +
                  108.0 * p4(n) + 600.0 * cu(n) + 1332.0 * sq(n) + 1416.0 * n) *
                     psi(0, An) +
                 (864.0 * p4(a) - 1728.0 * cu(a) + 864.0 * sq(a)) * sq(psi(0, one)) *
                     psi(0, A1) +
                 (-432.0 * p4(a) + 2016.0 * cu(a) - 3024.0 * sq(a) + 1440.0 * a) *
                     psi(0, one) * psi(0, A1) +
                 (108.0 * p4(a) - 600.0 * cu(a) + 1332.0 * sq(a) - 1416.0 * a) *
                     psi(0, A1) +
                 (-432.0 * sq(a) * sq(n) + 864.0 * cu(a) * n - 2160.0 * sq(a) * n +
                  864.0 * cu(a) - 1728.0 * sq(a) + 288.0 * a * cu(n) +
                  1296.0 * a * sq(n) + 1872.0 * a * n + 864.0 * a - 216.0 * p4(n) -
                  1008.0 * cu(n) - 1512.0 * sq(n) - 720.0 * n) *
                     sq(psi(0, N1)) +
                 (648.0 * sq(a) * sq(n) - 2160.0 * cu(a) * n + 5256.0 * sq(a) * n -
                  1296.0 * cu(a) + 3312.0 * sq(a) - 336.0 * a * cu(n) -
                  1944.0 * a * sq(n) - 4920.0 * a * n - 3168.0 * a + 216.0 * p4(n) +
                  1200.0 * cu(n) + 2664.0 * sq(n) + 2832.0 * n + 1296.0) *
                     psi(0, N1) +
                 (-864.0 * cu(a) + 1728.0 * sq(a) - 864.0 * a) * sq(psi(0, one)) +
                 (1296.0 * cu(a) - 3312.0 * sq(a) + 3168.0 * a - 1296.0) * psi(0, one) -
                 378.0 * sq(a) * sq(n) + 2268.0 * cu(a) * n - 5370.0 * sq(a) * n +
                 148.0 * a * cu(n) + 1134.0 * a * sq(n) + 4790.0 * a * n - 81.0 * p4(n) -
                 546.0 * cu(n) - 1575.0 * sq(n) - 2550.0 * n));

    rec("A47", sum_n(p4(k) * psi(0, k + a) * sq(psi(0, k))),
        1.0 / 15.0 * (-6.0 * p5(a) + 15.0 * p4(a) - 10.0 * cu(a) + a) * Sp0p0k -
            1.0 / 30.0 * (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a) * Sp0k2 +
            1.0 / 900.0 *
                (72.0 * p5(a) - 405.0 * p4(a) + 770.0 * cu(a) - 525.0 * sq(a) +
                 28.0 * a + 30.0) *
                Sp0k +
            1.0 / 54000.0 *
                ((10800.0 * p5(a) - 27000.0 * p4(a) + 18000.0 * cu(a) - 1800.0 * a +
                  10800.0 * p5(n) + 27000.0 * p4(n) + 18000.0 * cu(n) - 1800.0 * n) *
                     sq(psi(0, N1)) * psi(0, An) +
                 (-4320.0 * p5(a) + 24300.0 * p4(a) - 46200.0 * cu(a) +
                  31500.0 * sq(a) - 1680.0 * a - 4320.0 * p5(n) - 24300.0 * p4(n) -
                  46200.0 * cu(n) - 31500.0 * sq(n) - 1680.0 * n) *
                     psi(0, N1) * psi(0, An) +
                 (864.0 * p5(a) - 5535.0 * p4(a) + 14590.0 * cu(a) - 19725.0 * sq(a) +
                  11486.0 * a + 864.0 * p5(n) + 5535.0 * p4(n) + 14590.0 * cu(n) +
                  19725.0 * sq(n) + 11486.0 * n) *
                     psi(0, An) +
                 (-10800.0 * p5(a) + 27000.0 * p4(a) - 18000.0 * cu(a) + 1800.0 * a) *
                     sq(psi(0, one)) * psi(0, A1) +
                 (4320.0 * p5(a) - 24300.0 * p4(a) + 46200.0 * cu(a) -
                  31500.0 * sq(a) + 1680.0 * a) *
                     psi(0, one) * psi(0, A1) +
                 (-864.0 * p5(a) + 5535.0 * p4(a) - 14590.0 * cu(a) + 19725.0 * sq(a) -
                  11486.0 * a) *
                     psi(0, A1) +
                 (-3600.0 * sq(a) * cu(n) + 5400.0 * cu(a) * sq(n) -
                  18900.0 * sq(a) * sq(n) - 10800.0 * p4(a) * n + 32400.0 * cu(a) * n -
                  33300.0 * sq(a) * n - 10800.0 * p4(a) + 27000.0 * cu(a) -
                  18000.0 * sq(a) + 2700.0 * a * p4(n) + 14400.0 * a * cu(n) +
                  25200.0 * a * sq(n) + 13500.0 * a * n - 2160.0 * p5(n) -
                  12150.0 * p4(n) - 23100.0 * cu(n) - 15750.0 * sq(n) - 840.0 * n +
                  1800.0) *
                     sq(psi(0, N1)) +
                 (3840.0 * sq(a) * cu(n) - 7560.0 * cu(a) * sq(n) +
                  26010.0 * sq(a) * sq(n) + 25920.0 * p4(a) * n - 75060.0 * cu(a) * n +
                  80970.0 * sq(a) * n + 15120.0 * p4(a) - 45900.0 * cu(a) +
                  52500.0 * sq(a) - 2430.0 * a * p4(n) - 15360.0 * a * cu(n) -
                  39480.0 * a * sq(n) - 49050.0 * a * n - 27000.0 * a + 1728.0 * p5(n) +
                  11070.0 * p4(n) + 29180.0 * cu(n) + 39450.0 * sq(n) + 22972.0 * n +
                  2520.0) *
                     psi(0, N1) +
                 (10800.0 * p4(a) - 27000.0 * cu(a) + 18000.0 * sq(a) - 1800.0) *
                     sq(psi(0, one)) +
                 (-15120.0 * p4(a) + 45900.0 * cu(a) - 52500.0 * sq(a) + 27000.0 * a -
                  2520.0) *
                     psi(0, one)) +
            1.0 / 1080000.0 *
                (-31360.0 * sq(a) * cu(n) + 84240.0 * cu(a) * sq(n) -
                 283290.0 * sq(a) * sq(n) - 535680.0 * p4(a) * n +
                 1501740.0 * cu(a) * n - 1515130.0 * sq(a) * n + 16470.0 * a * p4(n) +
                 125440.0 * a * cu(n) + 416920.0 * a * sq(n) + 795450.0 * a * n -
                 10368.0 * p5(n) - 76545.0 * p4(n) - 239330.0 * cu(n) -
                 400575.0 * sq(n) - 331582.0 * n));

    // ---- sum k^c psi_0^2(k+a) psi_0(k), c = 0..4 (A48-A52) ----
    rec("A48", sum_n(sq(psi(0, k + a)) * psi(0, k)),
        -a * Sp0sqk + (2.0 * a - 1.0) * Sp0k +
            (a + n) * psi(0, N1) * sq(psi(0, An)) - (a + n) * sq(psi(0, An)) -
            (2.0 * a + 2.0 * n + 1.0) * psi(0, N1) * psi(0, An) +
            (4.0 * a + 4.0 * n + 1.0) * psi(0, An) - a * psi(0, one) * sq(psi(0, A1)) +
            a * sq(psi(0, A1)) + (2.0 * a + 1.0) * psi(0, one) * psi(0, A1) -
            (4.0 * a + 1.0) * psi(0, A1) + (2.0 * n + 2.0) * psi(0, N1) -
            2.0 * psi(0, one) - 6.0 * n);

    rec("A49", sum_n(k * sq(psi(0, k + a)) * psi(0, k)),
        0.5 * a * (a - 1.0) * Sp0sqk - 0.5 * (3.0 * sq(a) - 3.0 * a + 1.0) * Sp0k +
            0.125 *
                ((-4.0 * sq(a) + 4.0 * a + 4.0 * sq(n) + 4.0 * n) * psi(0, N1) *
                     sq(psi(0, An)) +
                 (2.0 * sq(a) - 6.0 * a - 2.0 * sq(n) - 6.0 * n) * sq(psi(0, An)) +
                 (12.0 * sq(a) + 8.0 * a * n - 4.0 * a - 4.0 * sq(n) - 12.0 * n - 4.0) *
                     psi(0, N1) * psi(0, An) +
                 (-16.0 * sq(a) - 12.0 * a * n + 16.0 * a + 4.0 * sq(n) + 20.0 * n +
                  6.0) *
                     psi(0, An) +
                 4.0 * (sq(a) - a) * psi(0, one) * sq(psi(0, A1)) +
                 2.0 * a * (3.0 - a) * sq(psi(0, A1)) -
                 (12.0 * sq(a) - 4.0 * a - 4.0) * psi(0, one) * psi(0, A1) +
                 (16.0 * sq(a) - 16.0 * a - 6.0) * psi(0, A1) +
                 (-12.0 * a * n - 12.0 * a + 2.0 * sq(n) + 10.0 * n + 8.0) * psi(0, N1) +
                 (12.0 * a - 8.0) * psi(0, one) + 28.0 * a * n - 3.0 * sq(n) -
                 27.0 * n));

    rec("A50", sum_n(sq(k) * sq(psi(0, k + a)) * psi(0, k)),
        -1.0 / 6.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * Sp0sqk +
            1.0 / 18.0 * (22.0 * cu(a) - 33.0 * sq(a) + 17.0 * a - 3.0) * Sp0k +
            1.0 / 216.0 *
                ((72.0 * cu(a) - 108.0 * sq(a) + 36.0 * a + 72.0 * cu(n) +
                  108.0 * sq(n) + 36.0 * n) *
                     psi(0, N1) * sq(psi(0, An)) +
                 (-24.0 * cu(a) + 90.0 * sq(a) - 102.0 * a - 24.0 * cu(n) -
                  90.0 * sq(n) - 102.0 * n) *
                     sq(psi(0, An)) +
                 (-144.0 * sq(a) * n - 264.0 * cu(a) + 252.0 * sq(a) +
                  72.0 * a * sq(n) + 288.0 * a * n + 12.0 * a - 48.0 * cu(n) -
                  180.0 * sq(n) - 204.0 * n - 36.0) *
                     psi(0, N1) * psi(0, An) +
                 (192.0 * sq(a) * n + 284.0 * cu(a) - 468.0 * sq(a) - 60.0 * a * sq(n) -
                  384.0 * a * n + 136.0 * a + 32.0 * cu(n) + 156.0 * sq(n) +
                  316.0 * n + 102.0) *
                     psi(0, An) +
                 (-72.0 * cu(a) + 108.0 * sq(a) - 36.0 * a) * psi(0, one) *
                     sq(psi(0, A1)) +
                 (24.0 * cu(a) - 90.0 * sq(a) + 102.0 * a) * sq(psi(0, A1)) +
                 (264.0 * cu(a) - 252.0 * sq(a) - 12.0 * a + 36.0) * psi(0, one) *
                     psi(0, A1) +
                 (-284.0 * cu(a) + 468.0 * sq(a) - 136.0 * a - 102.0) * psi(0, A1) +
                 (264.0 * sq(a) * n + 264.0 * sq(a) - 60.0 * a * sq(n) - 384.0 * a * n -
                  324.0 * a + 16.0 * cu(n) + 78.0 * sq(n) + 158.0 * n + 96.0) *
                     psi(0, N1) +
                 (-264.0 * sq(a) + 324.0 * a - 96.0) * psi(0, one) - 548.0 * sq(a) * n +
                 76.0 * a * sq(n) + 832.0 * a * n - 16.0 * cu(n) - 105.0 * sq(n) -
                 365.0 * n));

    rec("A51", sum_n(cu(k) * sq(psi(0, k + a)) * psi(0, k)),
        0.25 * sq(a) * sq(a - 1.0) * Sp0sqk -
            5.0 / 24.0 * a * (5.0 * cu(a) - 10.0 * sq(a) + 7.0 * a - 2.0) * Sp0k +
            1.0 / 288.0 *
                ((-72.0 * p4(a) + 144.0 * cu(a) - 72.0 * sq(a) + 72.0 * p4(n) +
                  144.0 * cu(n) + 72.0 * sq(n)) *
                     psi(0, N1) * sq(psi(0, An)) +
                 (18.0 * p4(a) - 84.0 * cu(a) + 126.0 * sq(a) - 60.0 * a -
                  18.0 * p4(n) - 84.0 * cu(n) - 126.0 * sq(n) - 60.0 * n) *
                     sq(psi(0, An)) +
                 (-72.0 * sq(a) * sq(n) + 144.0 * cu(a) * n - 360.0 * sq(a) * n +
                  300.0 * p4(a) - 456.0 * cu(a) + 132.0 * sq(a) + 48.0 * a * cu(n) +
                  216.0 * a * sq(n) + 312.0 * a * n + 24.0 * a - 36.0 * p4(n) -
                  168.0 * cu(n) - 252.0 * sq(n) - 120.0 * n) *
                     psi(0, N1) * psi(0, An) +
                 (54.0 * sq(a) * sq(n) - 180.0 * cu(a) * n + 438.0 * sq(a) * n -
                  280.0 * p4(a) + 628.0 * cu(a) - 380.0 * sq(a) - 28.0 * a * cu(n) -
                  162.0 * a * sq(n) - 410.0 * a * n - 16.0 * a + 18.0 * p4(n) +
                  100.0 * cu(n) + 222.0 * sq(n) + 236.0 * n + 60.0) *
                     psi(0, An) +
                 (72.0 * p4(a) - 144.0 * cu(a) + 72.0 * sq(a)) * psi(0, one) *
                     sq(psi(0, A1)) +
                 (-18.0 * p4(a) + 84.0 * cu(a) - 126.0 * sq(a) + 60.0 * a) *
                     sq(psi(0, A1)) -
                 (300.0 * p4(a) - 456.0 * cu(a) + 132.0 * sq(a) + 24.0 * a) *
                     psi(0, one) * psi(0, A1) +
                 (280.0 * p4(a) - 628.0 * cu(a) + 380.0 * sq(a) + 16.0 * a - 60.0) *
                     psi(0, A1) +
                 (78.0 * sq(a) * sq(n) - 300.0 * cu(a) * n + 606.0 * sq(a) * n -
                  300.0 * cu(a) + 528.0 * sq(a) - 28.0 * a * cu(n) - 162.0 * a * sq(n) -
                  410.0 * a * n - 276.0 * a + 9.0 * p4(n) + 50.0 * cu(n) +
                  111.0 * sq(n) + 118.0 * n + 48.0) *
                     psi(0, N1) +
                 (300.0 * cu(a) - 528.0 * sq(a) + 276.0 * a - 48.0) * psi(0, one)) +
            1.0 / 3456.0 *
                (-1068.0 * sq(a) * sq(n) + 6960.0 * cu(a) * n - 14220.0 * sq(a) * n +
                 296.0 * a * cu(n) + 2268.0 * a * sq(n) + 9580.0 * a * n - 81.0 * p4(n) -
                 546.0 * cu(n) - 1575.0 * sq(n) - 2550.0 * n));

    rec("A52", sum_n(p4(k) * sq(psi(0, k + a)) * psi(0, k)),
        1.0 / 30.0 * (-6.0 * p5(a) + 15.0 * p4(a) - 10.0 * cu(a) + a) * Sp0sqk +
            1.0 / 900.0 *
                (822.0 * p5(a) - 2055.0 * p4(a) + 1820.0 * cu(a) - 675.0 * sq(a) +
                 28.0 * a + 30.0) *
                Sp0k +
            1.0 / 54000.0 *
                ((10800.0 * p5(a) - 27000.0 * p4(a) + 18000.0 * cu(a) - 1800.0 * a +
                  10800.0 * p5(n) + 27000.0 * p4(n) + 18000.0 * cu(n) - 1800.0 * n) *
                     psi(0, N1) * sq(psi(0, An)) +
                 (-2160.0 * p5(a) + 12150.0 * p4(a) - 23100.0 * cu(a) +
                  15750.0 * sq(a) - 840.0 * a - 2160.0 * p5(n) - 12150.0 * p4(n) -
                  23100.0 * cu(n) - 15750.0 * sq(n) - 840.0 * n) *
                     sq(psi(0, An)) +
                 (10800.0 * cu(a) * sq(n) - 7200.0 * sq(a) * cu(n) -
                  37800.0 * sq(a) * sq(n) - 21600.0 * p4(a) * n + 64800.0 * cu(a) * n -
                  66600.0 * sq(a) * n - 49320.0 * p5(a) + 101700.0 * p4(a) -
                  55200.0 * cu(a) + 4500.0 * sq(a) + 5400.0 * a * p4(n) +
                  28800.0 * a * cu(n) + 50400.0 * a * sq(n) + 27000.0 * a * n -
                  1680.0 * a - 4320.0 * p5(n) - 24300.0 * p4(n) - 46200.0 * cu(n) -
                  31500.0 * sq(n) - 1680.0 * n + 1800.0) *
                     psi(0, N1) * psi(0, An) +
                 (-7560.0 * cu(a) * sq(n) + 3840.0 * sq(a) * cu(n) +
                  26010.0 * sq(a) * sq(n) + 25920.0 * p4(a) * n - 75060.0 * cu(a) * n +
                  80970.0 * sq(a) * n + 41478.0 * p5(a) - 116700.0 * p4(a) +
                  101030.0 * cu(a) - 19200.0 * sq(a) - 2430.0 * a * p4(n) -
                  15360.0 * a * cu(n) - 39480.0 * a * sq(n) - 49050.0 * a * n -
                  8528.0 * a + 1728.0 * p5(n) + 11070.0 * p4(n) + 29180.0 * cu(n) +
                  39450.0 * sq(n) + 22972.0 * n + 840.0) *
                     psi(0, An) +
                 (-10800.0 * p5(a) + 27000.0 * p4(a) - 18000.0 * cu(a) + 1800.0 * a) *
                     psi(0, one) * sq(psi(0, A1)) +
                 (2160.0 * p5(a) - 12150.0 * p4(a) + 23100.0 * cu(a) -
                  15750.0 * sq(a) + 840.0 * a) *
                     sq(psi(0, A1)) +
                 (49320.0 * p5(a) - 101700.0 * p4(a) + 55200.0 * cu(a) -
                  4500.0 * sq(a) + 1680.0 * a - 1800.0) *
                     psi(0, one) * psi(0, A1) +
                 (-41478.0 * p5(a) + 116700.0 * p4(a) - 101030.0 * cu(a) +
                  19200.0 * sq(a) + 8528.0 * a - 840.0) *
                     psi(0, A1) +
                 (5640.0 * sq(a) * cu(n) - 13860.0 * cu(a) * sq(n) +
                  37710.0 * sq(a) * sq(n) + 49320.0 * p4(a) * n - 126360.0 * cu(a) * n +
                  114270.0 * sq(a) * n + 49320.0 * p4(a) - 112500.0 * cu(a) +
                  82200.0 * sq(a) - 2430.0 * a * p4(n) - 15360.0 * a * cu(n) -
                  39480.0 * a * sq(n) - 49050.0 * a * n - 22500.0 * a + 864.0 * p5(n) +
                  5535.0 * p4(n) + 14590.0 * cu(n) + 11486.0 * n + 19725.0 * sq(n) +
                  1680.0) *
                     psi(0, N1) +
                 (-49320.0 * p4(a) + 112500.0 * cu(a) - 82200.0 * sq(a) + 22500.0 * a -
                  1680.0) *
                     psi(0, one)) +
            1.0 / 1080000.0 *
                (-90920.0 * sq(a) * cu(n) + 294180.0 * cu(a) * sq(n) -
                 803880.0 * sq(a) * sq(n) - 1815960.0 * p4(a) * n +
                 4644180.0 * cu(a) * n - 4091960.0 * sq(a) * n + 32940.0 * a * p4(n) +
                 250880.0 * a * cu(n) + 833840.0 * a * sq(n) + 1590900.0 * a * n -
                 10368.0 * p5(n) - 76545.0 * p4(n) - 239330.0 * cu(n) -
                 400575.0 * sq(n) - 331582.0 * n));

    // ---- sum k^c psi_0^4(k+a), c = 0..4 (A53-A57): semi-closed via
    //      sum psi_1(k+a)/(k+a) ----
    rec("A53", sum_n(p4(psi(0, k + a))),
        2.0 * Sp1ka - 0.5 * psi(2, An) + 0.5 * psi(2, A1) -
            2.0 * psi(0, An) * psi(1, An) + 2.0 * psi(0, A1) * psi(1, A1) +
            2.0 * psi(1, An) - 2.0 * psi(1, A1) + (a + n) * p4(psi(0, An)) +
            (-4.0 * a - 4.0 * n - 2.0) * cu(psi(0, An)) +
            (12.0 * a + 12.0 * n + 6.0) * sq(psi(0, An)) +
            (-24.0 * a - 24.0 * n - 12.0) * psi(0, An) - a * p4(psi(0, A1)) +
            (4.0 * a + 2.0) * cu(psi(0, A1)) - (12.0 * a + 6.0) * sq(psi(0, A1)) +
            (24.0 * a + 12.0) * psi(0, A1) + 24.0 * n);

    rec("A54", sum_n(k * p4(psi(0, k + a))),
        (-2.0 * a + 1.0) * Sp1ka +
            0.25 *
                ((2.0 * a - 1.0) * psi(2, An) + (-2.0 * a + 1.0) * psi(2, A1) +
                 (8.0 * a - 4.0) * psi(0, An) * psi(1, An) +
                 (-8.0 * a + 4.0) * psi(0, A1) * psi(1, A1) +
                 (-8.0 * a + 4.0) * psi(1, An) + (8.0 * a - 4.0) * psi(1, A1) +
                 (-2.0 * sq(a) + 2.0 * a + 2.0 * sq(n) + 2.0 * n) * p4(psi(0, An)) +
                 (12.0 * sq(a) + 8.0 * a * n - 4.0 * a - 4.0 * sq(n) - 12.0 * n - 4.0) *
                     cu(psi(0, An)) +
                 (-42.0 * sq(a) - 36.0 * a * n + 6.0 * a + 6.0 * sq(n) + 30.0 * n +
                  14.0) *
                     sq(psi(0, An)) +
                 (90.0 * sq(a) + 84.0 * a * n - 6.0 * a - 6.0 * sq(n) - 54.0 * n -
                  26.0) *
                     psi(0, An) +
                 (2.0 * sq(a) - 2.0 * a) * p4(psi(0, A1)) +
                 (-12.0 * sq(a) + 4.0 * a + 4.0) * cu(psi(0, A1)) +
                 (42.0 * sq(a) - 6.0 * a - 14.0) * sq(psi(0, A1)) +
                 (-90.0 * sq(a) + 6.0 * a + 26.0) * psi(0, A1) - 90.0 * a * n +
                 3.0 * sq(n) + 51.0 * n));

    rec("A55", sum_n(sq(k) * p4(psi(0, k + a))),
        1.0 / 3.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * Sp1ka +
            1.0 / 324.0 *
                ((-162.0 * sq(a) + 162.0 * a - 27.0) * psi(2, An) +
                 (162.0 * sq(a) - 162.0 * a + 27.0) * psi(2, A1) +
                 (-648.0 * sq(a) + 648.0 * a - 108.0) * psi(0, An) * psi(1, An) +
                 (648.0 * sq(a) - 648.0 * a + 108.0) * psi(0, A1) * psi(1, A1) +
                 (648.0 * sq(a) - 648.0 * a + 144.0) * psi(1, An) +
                 (-648.0 * sq(a) + 648.0 * a - 144.0) * psi(1, A1) +
                 (108.0 * cu(a) - 162.0 * sq(a) + 54.0 * a + 108.0 * cu(n) +
                  162.0 * sq(n) + 54.0 * n) *
                     p4(psi(0, An)) +
                 (-432.0 * sq(a) * n - 792.0 * cu(a) + 756.0 * sq(a) +
                  216.0 * a * sq(n) + 864.0 * a * n + 36.0 * a - 144.0 * cu(n) -
                  540.0 * sq(n) - 612.0 * n - 108.0) *
                     cu(psi(0, An)) +
                 (2376.0 * sq(a) * n + 3060.0 * cu(a) - 2214.0 * sq(a) -
                  540.0 * a * sq(n) - 3456.0 * a * n - 846.0 * a + 144.0 * cu(n) +
                  702.0 * sq(n) + 1422.0 * n + 594.0) *
                     sq(psi(0, An)) +
                 (-6120.0 * sq(a) * n - 6900.0 * cu(a) + 4230.0 * sq(a) +
                  684.0 * a * sq(n) + 7488.0 * a * n + 2022.0 * a - 96.0 * cu(n) -
                  630.0 * sq(n) - 2190.0 * n - 990.0) *
                     psi(0, An) +
                 (-108.0 * cu(a) + 162.0 * sq(a) - 54.0 * a) * p4(psi(0, A1)) +
                 (792.0 * cu(a) - 756.0 * sq(a) - 36.0 * a + 108.0) * cu(psi(0, A1)) +
                 (-3060.0 * cu(a) + 2214.0 * sq(a) + 846.0 * a - 594.0) *
                     sq(psi(0, A1)) +
                 (6900.0 * cu(a) - 4230.0 * sq(a) - 2022.0 * a + 990.0) * psi(0, A1) +
                 6900.0 * sq(a) * n - 390.0 * a * sq(n) - 7680.0 * a * n +
                 32.0 * cu(n) + 291.0 * sq(n) + 1891.0 * n));

    rec("A56", sum_n(cu(k) * p4(psi(0, k + a))),
        (-2.0 * cu(a) + 3.0 * sq(a) - a) * Sp1ka +
            1.0 / 3456.0 *
                ((1728.0 * cu(a) - 2592.0 * sq(a) + 864.0 * a) * psi(2, An) +
                 (-1728.0 * cu(a) + 2592.0 * sq(a) - 864.0 * a) * psi(2, A1) +
                 (6912.0 * cu(a) - 10368.0 * sq(a) + 3456.0 * a) * psi(0, An) *
                     psi(1, An) +
                 (-6912.0 * cu(a) + 10368.0 * sq(a) - 3456.0 * a) * psi(0, A1) *
                     psi(1, A1) +
                 (-6912.0 * cu(a) + 10368.0 * sq(a) - 4608.0 * a + 576.0) * psi(1, An) +
                 (6912.0 * cu(a) - 10368.0 * sq(a) + 4608.0 * a - 576.0) * psi(1, A1) -
                 864.0 * (p4(a) - 2.0 * cu(a) + sq(a) - p4(n) - 2.0 * cu(n) - sq(n)) *
                     p4(psi(0, An)) +
                 288.0 *
                     (-6.0 * sq(a) * sq(n) + 12.0 * cu(a) * n - 30.0 * sq(a) * n +
                      25.0 * p4(a) - 38.0 * cu(a) + 11.0 * sq(a) + 4.0 * a * cu(n) +
                      18.0 * a * sq(n) + 26.0 * a * n + 2.0 * a - 3.0 * p4(n) -
                      14.0 * cu(n) - 21.0 * sq(n) - 10.0 * n) *
                     cu(psi(0, An)) -
                 72.0 *
                     (-78.0 * sq(a) * sq(n) + 300.0 * cu(a) * n - 606.0 * sq(a) * n +
                      415.0 * p4(a) - 530.0 * cu(a) + 17.0 * sq(a) + 28.0 * a * cu(n) +
                      162.0 * a * sq(n) + 410.0 * a * n + 146.0 * a - 9.0 * p4(n) -
                      50.0 * cu(n) - 111.0 * sq(n) - 118.0 * n - 36.0) *
                     sq(psi(0, An)) +
                 12.0 *
                     (-690.0 * sq(a) * sq(n) + 4980.0 * cu(a) * n -
                      8850.0 * sq(a) * n + 5845.0 * p4(a) - 6710.0 * cu(a) -
                      301.0 * sq(a) + 148.0 * a * cu(n) + 1134.0 * a * sq(n) +
                      4790.0 * a * n + 1790.0 * a - 27.0 * p4(n) - 182.0 * cu(n) -
                      525.0 * sq(n) - 850.0 * n - 348.0) *
                     psi(0, An) +
                 (864.0 * p4(a) - 1728.0 * cu(a) + 864.0 * sq(a)) * p4(psi(0, A1)) +
                 (-7200.0 * p4(a) + 10944.0 * cu(a) - 3168.0 * sq(a) - 576.0 * a) *
                     cu(psi(0, A1)) +
                 (29880.0 * p4(a) - 38160.0 * cu(a) + 1224.0 * sq(a) + 10512.0 * a -
                  2592.0) *
                     sq(psi(0, A1)) +
                 (-70140.0 * p4(a) + 80520.0 * cu(a) + 3612.0 * sq(a) - 21480.0 * a +
                  4176.0) *
                     psi(0, A1) +
                 5190.0 * sq(a) * sq(n) - 70140.0 * cu(a) * n + 115590.0 * sq(a) * n -
                 700.0 * a * cu(n) - 7290.0 * a * sq(n) - 55250.0 * a * n +
                 81.0 * p4(n) + 674.0 * cu(n) + 2631.0 * sq(n) + 7414.0 * n));

    rec("A57", sum_n(p4(k) * p4(psi(0, k + a))),
        (2.0 * p4(a) - 4.0 * cu(a) + 2.0 * sq(a) - 1.0 / 15.0) * Sp1ka +
            1.0 / 270000.0 *
                (-4500.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) *
                     psi(2, An) +
                 4500.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) *
                     psi(2, A1) -
                 18000.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) *
                     psi(0, An) * psi(1, An) +
                 18000.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) *
                     psi(0, A1) * psi(1, A1) +
                 1200.0 *
                     (450.0 * p4(a) - 900.0 * cu(a) + 600.0 * sq(a) - 150.0 * a + 7.0) *
                     psi(1, An) -
                 1200.0 *
                     (450.0 * p4(a) - 900.0 * cu(a) + 600.0 * sq(a) - 150.0 * a + 7.0) *
                     psi(1, A1) +
                 9000.0 *
                     (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a + 6.0 * p5(n) +
                      15.0 * p4(n) + 10.0 * cu(n) - n) *
                     p4(psi(0, An)) -
                 600.0 *
                     (-180.0 * cu(a) * sq(n) + 120.0 * sq(a) * cu(n) +
                      630.0 * sq(a) * sq(n) + 360.0 * p4(a) * n - 1080.0 * cu(a) * n +
                      1110.0 * sq(a) * n + 822.0 * p5(a) - 1695.0 * p4(a) +
                      920.0 * cu(a) - 75.0 * sq(a) - 90.0 * a * p4(n) -
                      480.0 * a * cu(n) - 840.0 * a * sq(n) - 450.0 * a * n + 28.0 * a +
                      72.0 * p5(n) + 405.0 * p4(n) + 770.0 * cu(n) + 525.0 * sq(n) +
                      28.0 * n - 30.0) *
                     cu(psi(0, An)) +
                 30.0 *
                     (-13860.0 * cu(a) * sq(n) + 5640.0 * sq(a) * cu(n) +
                      37710.0 * sq(a) * sq(n) + 49320.0 * p4(a) * n -
                      126360.0 * cu(a) * n + 114270.0 * sq(a) * n + 72114.0 * p5(a) -
                      130965.0 * p4(a) + 42340.0 * cu(a) + 30225.0 * sq(a) -
                      2430.0 * a * p4(n) - 15360.0 * a * cu(n) - 39480.0 * a * sq(n) -
                      49050.0 * a * n - 15514.0 * a + 864.0 * p5(n) + 5535.0 * p4(n) +
                      14590.0 * cu(n) + 11486.0 * n + 19725.0 * sq(n) + 840.0) *
                     sq(psi(0, An)) -
                 (-683820.0 * cu(a) * sq(n) + 178680.0 * sq(a) * cu(n) +
                  1561770.0 * sq(a) * sq(n) + 4326840.0 * p4(a) * n -
                  10021320.0 * cu(a) * n + 7730490.0 * sq(a) * n + 5249118.0 * p5(a) -
                  8795955.0 * p4(a) + 2200580.0 * cu(a) + 2163075.0 * sq(a) -
                  49410.0 * a * p4(n) - 376320.0 * a * cu(n) - 1250760.0 * a * sq(n) -
                  2386350.0 * a * n - 973418.0 * a + 10368.0 * p5(n) +
                  76545.0 * p4(n) + 239330.0 * cu(n) + 400575.0 * sq(n) +
                  331582.0 * n + 119580.0) *
                     psi(0, An) -
                 9000.0 * (6.0 * p5(a) - 15.0 * p4(a) + 10.0 * cu(a) - a) *
                     p4(psi(0, A1)) +
                 600.0 *
                     (822.0 * p5(a) - 1695.0 * p4(a) + 920.0 * cu(a) - 75.0 * sq(a) +
                      28.0 * a - 30.0) *
                     cu(psi(0, A1)) -
                 30.0 *
                     (72114.0 * p5(a) - 130965.0 * p4(a) + 42340.0 * cu(a) +
                      30225.0 * sq(a) - 15514.0 * a + 840.0) *
                     sq(psi(0, A1)) +
                 (5249118.0 * p5(a) - 8795955.0 * p4(a) + 2200580.0 * cu(a) +
                  2163075.0 * sq(a) - 973418.0 * a + 119580.0) *
                     psi(0, A1)) +
            1.0 / 16200000.0 *
                (4769160.0 * sq(a) * cu(n) - 27668340.0 * cu(a) * sq(n) +
                 55809990.0 * sq(a) * sq(n) + 314947080.0 * p4(a) * n -
                 685230840.0 * cu(a) * n + 480804630.0 * sq(a) * n -
                 896670.0 * a * p4(n) - 8355840.0 * a * cu(n) -
                 37164120.0 * a * sq(n) - 121392450.0 * a * n + 124416.0 * p5(n) +
                 1070415.0 * p4(n) + 4055710.0 * cu(n) + 8810025.0 * sq(n) +
                 9710234.0 * n));

    // ---- sum k^c psi_0(k+a) psi_1(k), c = 0..4 (A58-A62) ----
    rec("A58", sum_n(psi(0, k + a) * psi(1, k)),
        a * Sp0k2 + Sp0k + (a + n) * psi(0, An) * psi(1, N1) - (n + 1.0) * psi(1, N1) -
            a * psi(1, one) * psi(0, A1) - psi(0, N1) + psi(1, one) + psi(0, one));

    rec("A59", sum_n(k * psi(0, k + a) * psi(1, k)),
        0.5 * (a - sq(a)) * Sp0k2 + 0.5 * Sp0k +
            0.25 *
                ((-2.0 * sq(a) + 2.0 * a + 2.0 * sq(n) + 2.0 * n) * psi(0, An) *
                     psi(1, N1) +
                 (2.0 * a * n + 2.0 * a - sq(n) - 3.0 * n - 2.0) * psi(1, N1) +
                 (2.0 * sq(a) - 2.0 * a) * psi(1, one) * psi(0, A1) +
                 (2.0 * a + 2.0 * n) * psi(0, An) - 2.0 * a * psi(0, A1) +
                 (2.0 * a - 1.0) * psi(0, N1) + (2.0 - 2.0 * a) * psi(1, one) +
                 (1.0 - 2.0 * a) * psi(0, one) - 3.0 * n));

    rec("A60", sum_n(sq(k) * psi(0, k + a) * psi(1, k)),
        1.0 / 6.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * Sp0k2 + 1.0 / 6.0 * Sp0k +
            1.0 / 36.0 *
                ((12.0 * cu(a) - 18.0 * sq(a) + 6.0 * a + 12.0 * cu(n) + 18.0 * sq(n) +
                  6.0 * n) *
                     psi(0, An) * psi(1, N1) +
                 (-12.0 * sq(a) * n - 12.0 * sq(a) + 6.0 * a * sq(n) + 24.0 * a * n +
                  18.0 * a - 4.0 * cu(n) - 15.0 * sq(n) - 17.0 * n - 6.0) *
                     psi(1, N1) +
                 (-12.0 * cu(a) + 18.0 * sq(a) - 6.0 * a) * psi(1, one) * psi(0, A1) +
                 (-6.0 * sq(a) + 24.0 * a + 6.0 * sq(n) + 24.0 * n) * psi(0, An) +
                 6.0 * a * (a - 4.0) * psi(0, A1) +
                 (-12.0 * sq(a) + 12.0 * a + 1.0) * psi(0, N1) +
                 6.0 * (2.0 * sq(a) - 3.0 * a + 1.0) * psi(1, one) +
                 (12.0 * sq(a) - 12.0 * a - 1.0) * psi(0, one) + 12.0 * a * n -
                 5.0 * sq(n) - 32.0 * n));

    rec("A61", sum_n(cu(k) * psi(0, k + a) * psi(1, k)),
        -0.25 * sq(a) * sq(a - 1.0) * Sp0k2 +
            1.0 / 288.0 *
                ((-72.0 * p4(a) + 144.0 * cu(a) - 72.0 * sq(a) + 72.0 * p4(n) +
                  144.0 * cu(n) + 72.0 * sq(n)) *
                     psi(0, An) * psi(1, N1) +
                 (-36.0 * sq(a) * sq(n) + 72.0 * cu(a) * n - 180.0 * sq(a) * n +
                  72.0 * cu(a) - 144.0 * sq(a) + 24.0 * a * cu(n) + 108.0 * a * sq(n) +
                  156.0 * a * n + 72.0 * a - 18.0 * p4(n) - 84.0 * cu(n) -
                  126.0 * sq(n) - 60.0 * n) *
                     psi(1, N1) +
                 (72.0 * p4(a) - 144.0 * cu(a) + 72.0 * sq(a)) * psi(1, one) *
                     psi(0, A1) +
                 (24.0 * cu(a) - 108.0 * sq(a) + 156.0 * a + 24.0 * cu(n) +
                  108.0 * sq(n) + 156.0 * n) *
                     psi(0, An) +
                 (-24.0 * cu(a) + 108.0 * sq(a) - 156.0 * a) * psi(0, A1) +
                 (72.0 * cu(a) - 108.0 * sq(a) + 12.0 * a + 12.0) * psi(0, N1) +
                 (-72.0 * cu(a) + 144.0 * sq(a) - 72.0 * a) * psi(1, one) +
                 (-72.0 * cu(a) + 108.0 * sq(a) - 12.0 * a - 12.0) * psi(0, one) -
                 60.0 * sq(a) * n + 24.0 * a * sq(n) + 168.0 * a * n - 14.0 * cu(n) -
                 81.0 * sq(n) - 205.0 * n));

    rec("A62", sum_n(p4(k) * psi(0, k + a) * psi(1, k)),
        -1.0 / 30.0 * a * (-6.0 * p4(a) + 15.0 * cu(a) - 10.0 * sq(a) + 1.0) * Sp0k2 -
            1.0 / 30.0 * Sp0k +
            1.0 / 3600.0 *
                ((720.0 * p5(a) - 1800.0 * p4(a) + 1200.0 * cu(a) - 120.0 * a +
                  720.0 * p5(n) + 1800.0 * p4(n) + 1200.0 * cu(n) - 120.0 * n) *
                     psi(1, N1) * psi(0, An) +
                 (-240.0 * sq(a) * cu(n) + 360.0 * cu(a) * sq(n) -
                  1260.0 * sq(a) * sq(n) - 720.0 * p4(a) * n + 2160.0 * cu(a) * n -
                  2220.0 * sq(a) * n - 720.0 * p4(a) + 1800.0 * cu(a) -
                  1200.0 * sq(a) + 180.0 * a * p4(n) + 960.0 * a * cu(n) +
                  1680.0 * a * sq(n) + 900.0 * a * n - 144.0 * p5(n) - 810.0 * p4(n) -
                  1540.0 * cu(n) - 1050.0 * sq(n) - 56.0 * n + 120.0) *
                     psi(1, N1) +
                 (-720.0 * p5(a) + 1800.0 * p4(a) - 1200.0 * cu(a) + 120.0 * a) *
                     psi(1, one) * psi(0, A1) +
                 (-180.0 * p4(a) + 960.0 * cu(a) - 1680.0 * sq(a) + 900.0 * a +
                  180.0 * p4(n) + 960.0 * cu(n) + 1680.0 * sq(n) + 900.0 * n) *
                     psi(0, An) +
                 (180.0 * p4(a) - 960.0 * cu(a) + 1680.0 * sq(a) - 900.0 * a) *
                     psi(0, A1) +
                 (-720.0 * p4(a) + 1440.0 * cu(a) - 420.0 * sq(a) - 300.0 * a - 56.0) *
                     psi(0, N1) +
                 (720.0 * p4(a) - 1800.0 * cu(a) + 1200.0 * sq(a) - 120.0) *
                     psi(1, one) +
                 (720.0 * p4(a) - 1440.0 * cu(a) + 420.0 * sq(a) + 300.0 * a + 56.0) *
                     psi(0, one) -
                 210.0 * sq(a) * sq(n) + 540.0 * cu(a) * n - 1710.0 * sq(a) * n +
                 120.0 * a * cu(n) + 780.0 * a * sq(n) + 2220.0 * a * n - 81.0 * p4(n) -
                 512.0 * cu(n) - 1316.0 * sq(n) - 1635.0 * n));

    // ---- sum k^c psi_1(k+a) psi_0(k), c = 0..4 (A63-A67) ----
    rec("A63", sum_n(psi(1, k + a) * psi(0, k)),
        -a * Sp1k - Sp0k + (a + n) * psi(0, N1) * psi(1, An) - (a + n) * psi(1, An) -
            a * psi(0, one) * psi(1, A1) + a * psi(1, A1) + psi(0, N1) * psi(0, An) -
            psi(0, An) - psi(0, one) * psi(0, A1) + psi(0, A1));

    rec("A64", sum_n(k * psi(1, k + a) * psi(0, k)),
        0.5 * a * (a - 1.0) * Sp1k + (a - 0.5) * Sp0k +
            0.25 *
                ((-2.0 * sq(a) + 2.0 * a + 2.0 * sq(n) + 2.0 * n) * psi(0, N1) *
                     psi(1, An) +
                 (sq(a) - 3.0 * a - sq(n) - 3.0 * n) * psi(1, An) +
                 (2.0 * sq(a) - 2.0 * a) * psi(0, one) * psi(1, A1) +
                 (3.0 * a - sq(a)) * psi(1, A1) -
                 (4.0 * a - 2.0) * psi(0, N1) * psi(0, An) +
                 (2.0 * a - 3.0) * psi(0, An) +
                 (4.0 * a - 2.0) * psi(0, one) * psi(0, A1) -
                 (2.0 * a - 3.0) * psi(0, A1) + (2.0 * n + 2.0) * psi(0, N1) -
                 2.0 * psi(0, one) - 3.0 * n));

    rec("A65", sum_n(sq(k) * psi(1, k + a) * psi(0, k)),
        -1.0 / 6.0 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * Sp1k -
            (sq(a) - a + 1.0 / 6.0) * Sp0k +
            1.0 / 36.0 *
                (6.0 * (2.0 * cu(a) - 3.0 * sq(a) + a + 2.0 * cu(n) + 3.0 * sq(n) + n) *
                     psi(0, N1) * psi(1, An) +
                 (-4.0 * cu(a) + 15.0 * sq(a) - 17.0 * a - 4.0 * cu(n) - 15.0 * sq(n) -
                  17.0 * n) *
                     psi(1, An) +
                 (36.0 * sq(a) - 36.0 * a + 6.0) * psi(0, N1) * psi(0, An) +
                 (-12.0 * sq(a) + 30.0 * a - 17.0) * psi(0, An) -
                 (12.0 * cu(a) - 18.0 * sq(a) + 6.0 * a) * psi(0, one) * psi(1, A1) +
                 (4.0 * cu(a) - 15.0 * sq(a) + 17.0 * a) * psi(1, A1) +
                 (-36.0 * sq(a) + 36.0 * a - 6.0) * psi(0, one) * psi(0, A1) +
                 (12.0 * sq(a) - 30.0 * a + 17.0) * psi(0, A1) +
                 (-24.0 * a * n - 24.0 * a + 6.0 * sq(n) + 24.0 * n + 18.0) *
                     psi(0, N1) +
                 (24.0 * a - 18.0) * psi(0, one) + 32.0 * a * n - 5.0 * sq(n) -
                 32.0 * n));

    rec("A66", sum_n(cu(k) * psi(1, k + a) * psi(0, k)),
        0.25 * sq(a - 1.0) * sq(a) * Sp1k +
            0.5 * a * (2.0 * sq(a) - 3.0 * a + 1.0) * Sp0k +
            1.0 / 288.0 *
                ((-72.0 * p4(a) + 144.0 * cu(a) - 72.0 * sq(a) + 72.0 * p4(n) +
                  144.0 * cu(n) + 72.0 * sq(n)) *
                     psi(0, N1) * psi(1, An) +
                 (18.0 * p4(a) - 84.0 * cu(a) + 126.0 * sq(a) - 60.0 * a -
                  18.0 * p4(n) - 84.0 * cu(n) - 126.0 * sq(n) - 60.0 * n) *
                     psi(1, An) +
                 (72.0 * p4(a) - 144.0 * cu(a) + 72.0 * sq(a)) * psi(0, one) *
                     psi(1, A1) +
                 (-18.0 * p4(a) + 84.0 * cu(a) - 126.0 * sq(a) + 60.0 * a) *
                     psi(1, A1) +
                 (-288.0 * cu(a) + 432.0 * sq(a) - 144.0 * a) * psi(0, N1) *
                     psi(0, An) +
                 (72.0 * cu(a) - 252.0 * sq(a) + 252.0 * a - 60.0) * psi(0, An) +
                 (288.0 * cu(a) - 432.0 * sq(a) + 144.0 * a) * psi(0, one) *
                     psi(0, A1) +
                 (-72.0 * cu(a) - 252.0 * a + 252.0 * sq(a) + 60.0) * psi(0, A1) +
                 (216.0 * sq(a) * n + 216.0 * sq(a) - 72.0 * a * sq(n) -
                  360.0 * a * n - 288.0 * a + 24.0 * cu(n) + 108.0 * sq(n) +
                  156.0 * n + 72.0) *
                     psi(0, N1) +
                 (-216.0 * sq(a) + 288.0 * a - 72.0) * psi(0, one) - 270.0 * sq(a) * n +
                 54.0 * a * sq(n) + 438.0 * a * n - 14.0 * cu(n) - 81.0 * sq(n) -
                 205.0 * n));

    rec("A67", sum_n(p4(k) * psi(1, k + a) * psi(0, k)),
        (-p4(a) + 2.0 * cu(a) - sq(a) + 1.0 / 30.0) * Sp0k -
            1.0 / 30.0 * a * (6.0 * p4(a) - 15.0 * cu(a) + 10.0 * sq(a) - 1.0) * Sp1k +
            1.0 / 1800.0 *
                ((360.0 * p5(a) - 900.0 * p4(a) + 600.0 * cu(a) - 60.0 * a +
                  360.0 * p5(n) + 900.0 * p4(n) + 600.0 * cu(n) - 60.0 * n) *
                     psi(0, N1) * psi(1, An) +
                 (-72.0 * p5(a) + 405.0 * p4(a) - 770.0 * cu(a) + 525.0 * sq(a) -
                  28.0 * a - 72.0 * p5(n) - 405.0 * p4(n) - 770.0 * cu(n) -
                  525.0 * sq(n) - 28.0 * n) *
                     psi(1, An) +
                 (-360.0 * p5(a) + 900.0 * p4(a) - 600.0 * cu(a) + 60.0 * a) *
                     psi(0, one) * psi(1, A1) +
                 (72.0 * p5(a) - 405.0 * p4(a) + 770.0 * cu(a) - 525.0 * sq(a) +
                  28.0 * a) *
                     psi(1, A1) +
                 (1800.0 * p4(a) - 3600.0 * cu(a) + 1800.0 * sq(a) - 60.0) *
                     psi(0, N1) * psi(0, An) +
                 (-360.0 * p4(a) + 1620.0 * cu(a) - 2310.0 * sq(a) + 1050.0 * a -
                  28.0) *
                     psi(0, An) +
                 (-1800.0 * p4(a) + 3600.0 * cu(a) - 1800.0 * sq(a) + 60.0) *
                     psi(0, one) * psi(0, A1) +
                 (360.0 * p4(a) - 1620.0 * cu(a) - 1050.0 * a + 2310.0 * sq(a) + 28.0) *
                     psi(0, A1) +
                 (540.0 * sq(a) * sq(n) - 1440.0 * cu(a) * n + 3240.0 * sq(a) * n -
                  1440.0 * cu(a) + 2700.0 * sq(a) - 240.0 * a * cu(n) -
                  1260.0 * a * sq(n) - 2220.0 * a * n - 1200.0 * a + 90.0 * p4(n) +
                  480.0 * cu(n) + 840.0 * sq(n) + 450.0 * n) *
                     psi(0, N1) +
                 (1440.0 * cu(a) - 2700.0 * sq(a) + 1200.0 * a) * psi(0, one)) +
            1.0 / 3600.0 *
                (-756.0 * sq(a) * sq(n) + 3456.0 * cu(a) * n - 7506.0 * sq(a) * n +
                 256.0 * a * cu(n) + 1734.0 * a * sq(n) + 5398.0 * a * n - 81.0 * p4(n) -
                 512.0 * cu(n) - 1316.0 * sq(n) - 1635.0 * n));

    // ---- sum k^c psi_1^2(k+a), c = 0..4 (A68-A72) ----
    rec("A68", sum_n(sq(psi(1, k + a))),
        2.0 * Sp1ka +
            0.5 * (-psi(2, An) + psi(2, A1) + 2.0 * (a + n) * sq(psi(1, An)) -
                   2.0 * a * sq(psi(1, A1))));

    rec("A69", sum_n(k * sq(psi(1, k + a))),
        (-2.0 * a + 1.0) * Sp1ka +
            0.25 *
                ((2.0 * a - 1.0) * psi(2, An) + (-2.0 * a + 1.0) * psi(2, A1) +
                 (-2.0 * sq(a) + 2.0 * a + 2.0 * sq(n) + 2.0 * n) * sq(psi(1, An)) +
                 2.0 * a * (a - 1.0) * sq(psi(1, A1)) +
                 (4.0 * a + 4.0 * n + 2.0) * psi(1, An) - (4.0 * a + 2.0) * psi(1, A1) +
                 4.0 * psi(0, An) - 4.0 * psi(0, A1)));

    rec("A70", sum_n(sq(k) * sq(psi(1, k + a))),
        -1.0 / 3.0 * (-6.0 * sq(a) + 6.0 * a - 1.0) * Sp1ka +
            1.0 / 12.0 *
                ((-6.0 * sq(a) + 6.0 * a - 1.0) * psi(2, An) +
                 (6.0 * sq(a) - 6.0 * a + 1.0) * psi(2, A1) +
                 (4.0 * cu(a) - 6.0 * sq(a) + 2.0 * a + 4.0 * cu(n) + 6.0 * sq(n) +
                  2.0 * n) *
                     sq(psi(1, An)) +
                 (-4.0 * cu(a) + 6.0 * sq(a) - 2.0 * a) * sq(psi(1, A1)) +
                 (-20.0 * sq(a) - 16.0 * a * n + 4.0 * a + 4.0 * sq(n) + 16.0 * n +
                  6.0) *
                     psi(1, An) +
                 (20.0 * sq(a) - 4.0 * a - 6.0) * psi(1, A1) +
                 (-24.0 * a + 12.0) * psi(0, An) + (24.0 * a - 12.0) * psi(0, A1) +
                 4.0 * n));

    rec("A71", sum_n(cu(k) * sq(psi(1, k + a))),
        (-2.0 * cu(a) + 3.0 * sq(a) - a) * Sp1ka +
            1.0 / 12.0 *
                ((6.0 * cu(a) - 9.0 * sq(a) + 3.0 * a) * psi(2, An) +
                 (-6.0 * cu(a) + 9.0 * sq(a) - 3.0 * a) * psi(2, A1) +
                 (-3.0 * p4(a) + 6.0 * cu(a) - 3.0 * sq(a) + 3.0 * p4(n) +
                  6.0 * cu(n) + 3.0 * sq(n)) *
                     sq(psi(1, An)) +
                 (3.0 * p4(a) - 6.0 * cu(a) + 3.0 * sq(a)) * sq(psi(1, A1)) +
                 (18.0 * sq(a) * n + 26.0 * cu(a) - 21.0 * sq(a) - 6.0 * a * sq(n) -
                  30.0 * a * n - 5.0 * a + 2.0 * cu(n) + 9.0 * sq(n) + 13.0 * n + 3.0) *
                     psi(1, An) +
                 (-26.0 * cu(a) + 21.0 * sq(a) + 5.0 * a - 3.0) * psi(1, A1) +
                 (36.0 * sq(a) - 36.0 * a + 7.0) * psi(0, An) +
                 (-36.0 * sq(a) + 36.0 * a - 7.0) * psi(0, A1) - 10.0 * a * n + sq(n) +
                 7.0 * n));

    rec("A72", sum_n(p4(k) * sq(psi(1, k + a))),
        1.0 / 15.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * Sp1ka +
            1.0 / 60.0 *
                ((-30.0 * p4(a) + 60.0 * cu(a) - 30.0 * sq(a) + 1.0) * psi(2, An) +
                 (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * psi(2, A1) +
                 (12.0 * p5(a) - 30.0 * p4(a) + 20.0 * cu(a) - 2.0 * a + 12.0 * p5(n) +
                  30.0 * p4(n) + 20.0 * cu(n) - 2.0 * n) *
                     sq(psi(1, An)) +
                 (-12.0 * p5(a) + 30.0 * p4(a) - 20.0 * cu(a) + 2.0 * a) *
                     sq(psi(1, A1)) +
                 (36.0 * sq(a) * sq(n) - 96.0 * cu(a) * n + 216.0 * sq(a) * n -
                  154.0 * p4(a) + 212.0 * cu(a) - 24.0 * sq(a) - 16.0 * a * cu(n) -
                  84.0 * a * sq(n) - 148.0 * a * n - 30.0 * a + 6.0 * p4(n) +
                  32.0 * cu(n) + 56.0 * sq(n) + 30.0 * n) *
                     psi(1, An) +
                 (154.0 * p4(a) - 212.0 * cu(a) + 24.0 * sq(a) + 30.0 * a) *
                     psi(1, A1) +
                 (-240.0 * cu(a) + 360.0 * sq(a) - 140.0 * a + 10.0) * psi(0, An) +
                 (240.0 * cu(a) - 360.0 * sq(a) + 140.0 * a - 10.0) * psi(0, A1) +
                 86.0 * sq(a) * n - 14.0 * a * sq(n) - 114.0 * a * n + 2.0 * cu(n) +
                 13.0 * sq(n) + 37.0 * n));

    // ---- sum k^c psi_0(k+a) psi_2(k+a), c = 0..4 (A73-A77) ----
    rec("A73", sum_n(psi(0, k + a) * psi(2, k + a)),
        -2.0 * Sp1ka + (a + n) * psi(0, An) * psi(2, An) - a * psi(0, A1) * psi(2, A1) -
            (a + n) * psi(2, An) + a * psi(2, A1) + 2.0 * psi(0, An) * psi(1, An) -
            2.0 * psi(1, An) - 2.0 * psi(0, A1) * psi(1, A1) + 2.0 * psi(1, A1));

    rec("A74", sum_n(k * psi(0, k + a) * psi(2, k + a)),
        (2.0 * a - 1.0) * Sp1ka +
            0.25 *
                ((-2.0 * sq(a) + 2.0 * a + 2.0 * sq(n) + 2.0 * n) * psi(0, An) *
                     psi(2, An) +
                 (2.0 * sq(a) - 2.0 * a) * psi(0, A1) * psi(2, A1) +
                 (3.0 * sq(a) + 2.0 * a * n - 3.0 * a - sq(n) - 3.0 * n) * psi(2, An) +
                 (3.0 * a - 3.0 * sq(a)) * psi(2, A1) -
                 (8.0 * a - 4.0) * psi(0, An) * psi(1, An) +
                 (8.0 * a - 4.0) * psi(0, A1) * psi(1, A1) +
                 (8.0 * a - 4.0) * psi(1, An) - (8.0 * a - 4.0) * psi(1, A1) -
                 2.0 * sq(psi(0, An)) + 2.0 * psi(0, An) + 2.0 * sq(psi(0, A1)) -
                 2.0 * psi(0, A1)));

    rec("A75", sum_n(sq(k) * psi(0, k + a) * psi(2, k + a)),
        -1.0 / 3.0 * (6.0 * sq(a) - 6.0 * a + 1.0) * Sp1ka +
            1.0 / 36.0 *
                ((12.0 * cu(a) - 18.0 * sq(a) + 6.0 * a + 12.0 * cu(n) + 18.0 * sq(n) +
                  6.0 * n) *
                     psi(0, An) * psi(2, An) +
                 (-12.0 * cu(a) + 18.0 * sq(a) - 6.0 * a) * psi(0, A1) * psi(2, A1) +
                 (-12.0 * sq(a) * n - 22.0 * cu(a) + 39.0 * sq(a) + 6.0 * a * sq(n) +
                  24.0 * a * n - 17.0 * a - 4.0 * cu(n) - 15.0 * sq(n) - 17.0 * n) *
                     psi(2, An) +
                 (22.0 * cu(a) - 39.0 * sq(a) + 17.0 * a) * psi(2, A1) +
                 (72.0 * sq(a) - 72.0 * a + 12.0) * psi(0, An) * psi(1, An) -
                 (72.0 * sq(a) - 72.0 * a + 12.0) * psi(0, A1) * psi(1, A1) +
                 (-72.0 * sq(a) + 72.0 * a - 16.0) * psi(1, An) +
                 (72.0 * sq(a) - 72.0 * a + 16.0) * psi(1, A1) +
                 (36.0 * a - 18.0) * sq(psi(0, An)) +
                 (-60.0 * a - 24.0 * n + 6.0) * psi(0, An) +
                 (18.0 - 36.0 * a) * sq(psi(0, A1)) + (60.0 * a - 6.0) * psi(0, A1) +
                 32.0 * n));

    rec("A76", sum_n(cu(k) * psi(0, k + a) * psi(2, k + a)),
        (2.0 * cu(a) - 3.0 * sq(a) + a) * Sp1ka +
            1.0 / 48.0 *
                ((-12.0 * sq(a) + 24.0 * cu(a) - 12.0 * p4(a) + 12.0 * sq(n) +
                  24.0 * cu(n) + 12.0 * p4(n)) *
                     psi(0, An) * psi(2, An) +
                 (12.0 * p4(a) - 24.0 * cu(a) + 12.0 * sq(a)) * psi(0, A1) *
                     psi(2, A1) +
                 (-6.0 * sq(a) * sq(n) + 12.0 * cu(a) * n - 30.0 * sq(a) * n +
                  25.0 * p4(a) - 62.0 * cu(a) + 47.0 * sq(a) + 4.0 * a * cu(n) +
                  18.0 * a * sq(n) + 26.0 * a * n - 10.0 * a - 3.0 * p4(n) -
                  14.0 * cu(n) - 21.0 * sq(n) - 10.0 * n) *
                     psi(2, An) +
                 (-25.0 * p4(a) + 62.0 * cu(a) - 47.0 * sq(a) + 10.0 * a) *
                     psi(2, A1) +
                 (-96.0 * cu(a) + 144.0 * sq(a) - 48.0 * a) * psi(0, An) * psi(1, An) +
                 (96.0 * cu(a) - 144.0 * sq(a) + 48.0 * a) * psi(0, A1) * psi(1, A1) +
                 (96.0 * cu(a) - 144.0 * sq(a) + 64.0 * a - 8.0) * psi(1, An) +
                 (-96.0 * cu(a) + 144.0 * sq(a) - 64.0 * a + 8.0) * psi(1, A1) +
                 (-72.0 * sq(a) + 72.0 * a - 12.0) * sq(psi(0, An)) +
                 (156.0 * sq(a) + 72.0 * a * n - 84.0 * a - 12.0 * sq(n) - 60.0 * n -
                  6.0) *
                     psi(0, An) +
                 (72.0 * sq(a) - 72.0 * a + 12.0) * sq(psi(0, A1)) +
                 (-156.0 * sq(a) + 84.0 * a + 6.0) * psi(0, A1) - 110.0 * a * n +
                 9.0 * sq(n) + 73.0 * n));

    rec("A77", sum_n(p4(k) * psi(0, k + a) * psi(2, k + a)),
        -1.0 / 15.0 * (30.0 * p4(a) - 60.0 * cu(a) + 30.0 * sq(a) - 1.0) * Sp1ka +
            1.0 / 1800.0 *
                ((360.0 * p5(a) - 900.0 * p4(a) + 600.0 * cu(a) - 60.0 * a +
                  360.0 * p5(n) + 900.0 * p4(n) + 600.0 * cu(n) - 60.0 * n) *
                     psi(0, An) * psi(2, An) +
                 (-360.0 * p5(a) + 900.0 * p4(a) - 600.0 * cu(a) + 60.0 * a) *
                     psi(0, A1) * psi(2, A1) +
                 (180.0 * cu(a) * sq(n) - 120.0 * sq(a) * cu(n) -
                  630.0 * sq(a) * sq(n) - 360.0 * p4(a) * n + 1080.0 * cu(a) * n -
                  1110.0 * sq(a) * n - 822.0 * p5(a) + 2595.0 * p4(a) -
                  2720.0 * cu(a) + 975.0 * sq(a) + 90.0 * a * p4(n) +
                  480.0 * a * cu(n) + 840.0 * a * sq(n) + 450.0 * a * n - 28.0 * a -
                  72.0 * p5(n) - 405.0 * p4(n) - 770.0 * cu(n) - 525.0 * sq(n) -
                  28.0 * n) *
                     psi(2, An) +
                 (822.0 * p5(a) - 2595.0 * p4(a) + 2720.0 * cu(a) - 975.0 * sq(a) +
                  28.0 * a) *
                     psi(2, A1) +
                 (3600.0 * p4(a) - 7200.0 * cu(a) + 3600.0 * sq(a) - 120.0) *
                     psi(0, An) * psi(1, An) +
                 (-3600.0 * p4(a) + 7200.0 * cu(a) - 3600.0 * sq(a) + 120.0) *
                     psi(0, A1) * psi(1, A1) +
                 (-3600.0 * p4(a) + 7200.0 * cu(a) - 4800.0 * sq(a) + 1200.0 * a -
                  56.0) *
                     psi(1, An) +
                 (3600.0 * p4(a) - 7200.0 * cu(a) + 4800.0 * sq(a) - 1200.0 * a +
                  56.0) *
                     psi(1, A1) +
                 (3600.0 * cu(a) - 5400.0 * sq(a) + 1800.0 * a) * sq(psi(0, An)) +
                 (-4320.0 * sq(a) * n - 9240.0 * cu(a) + 9540.0 * sq(a) +
                  1080.0 * a * sq(n) + 6480.0 * a * n - 1320.0 * a - 240.0 * cu(n) -
                  1260.0 * sq(n) - 2220.0 * n - 150.0) *
                     psi(0, An) +
                 (-3600.0 * cu(a) + 5400.0 * sq(a) - 1800.0 * a) * sq(psi(0, A1)) +
                 (9240.0 * cu(a) - 9540.0 * sq(a) + 1320.0 * a + 150.0) * psi(0, A1) +
                 7284.0 * sq(a) * n - 966.0 * a * sq(n) - 9216.0 * a * n +
                 128.0 * cu(n) + 867.0 * sq(n) + 2699.0 * n));

    // ---- closed forms for the (k+a)-denominator sums (A78-A80) ----
    rec("A78", sum_n((sq(psi(0, k + a)) + psi(1, k + a)) / (k + a)),
        1.0 / 3.0 *
            (psi(2, An) - psi(2, A1) + 3.0 * psi(0, An) * psi(1, An) -
             3.0 * psi(0, A1) * psi(1, A1) + cu(psi(0, An)) - cu(psi(0, A1))));

    rec("A79", sum_n(sq(psi(0, k + a)) / (k + a) + psi(0, k + a) / sq(k + a)),
        1.0 / 6.0 *
            (-psi(2, An) + psi(2, A1) + 2.0 * cu(psi(0, An)) - 2.0 * cu(psi(0, A1))));

    rec("A80",
        sum_n((cu(psi(0, k + a)) + 3.0 * psi(0, k + a) * psi(1, k + a) +
               psi(2, k + a)) /
              (k + a)),
        0.25 * (psi(3, An) - psi(3, A1) + 4.0 * psi(0, An) * psi(2, An) -
                4.0 * psi(0, A1) * psi(2, A1) + 3.0 * sq(psi(1, An)) -
                3.0 * sq(psi(1, A1)) + 6.0 * sq(psi(0, An)) * psi(1, An) -
                6.0 * sq(psi(0, A1)) * psi(1, A1) + p4(psi(0, An)) - p4(psi(0, A1))));
}


#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC pop_options
#endif

}  // namespace qent::detail
