#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <fstream>

#include "qent/eps_series.hpp"
#include "qent/identities.hpp"

using namespace qent;

namespace {

expr::Env point_a(int n, double a) {
    expr::Env e;
    e.n = n;
    e.a = a;
    return e;
}

expr::Env point_b(int m, int n) {
    expr::Env e;
    e.m = m;
    e.n = n;
    e.a = 0.5;
    return e;
}

}  // namespace

TEST_CASE("omega bases") {
    // single-term collapse at m = 1
    for (int n : {1, 4, 12}) CHECK(omega(1, 1, n) == Catch::Approx(polygamma_int(0, n)).epsilon(1e-14));
    // Omega_17 is the square of Omega_1's sum
    for (int m : {1, 3, 6})
        for (int n : {m, m + 4}) {
            double o1 = omega(1, m, n);
            CHECK(omega(17, m, n) == Catch::Approx(o1 * o1).epsilon(1e-13));
        }
    // two-term direct value
    double expect = polygamma_int(1, 1) + 0.5 * polygamma_int(1, 2);
    CHECK(omega(3, 2, 2) == Catch::Approx(expect).epsilon(1e-14));
    CHECK(omega(3, 2, 2) == Catch::Approx(1.9674011).margin(1e-7));
    CHECK_THROWS_AS(omega(0, 2, 2), domain_error);
    CHECK_THROWS_AS(omega(18, 2, 2), domain_error);
    CHECK_THROWS_AS(omega(1, 3, 2), domain_error);
}

TEST_CASE("catalog holds exactly the printed identity set") {
    const auto& cat = identity_catalog();
    CHECK(cat.size() == 103);  // A3..A80 (78) + B2..B26 (25)
    CHECK_NOTHROW(find_identity("A3"));
    CHECK_NOTHROW(find_identity("A80"));
    CHECK_NOTHROW(find_identity("B2"));
    CHECK_NOTHROW(find_identity("B26"));
    CHECK_THROWS_AS(find_identity("A81"), domain_error);
    // the psi-without-subscript readings are recorded, not silently fixed
    CHECK(find_identity("A38").notes.find("psi_0") != std::string::npos);
}

TEST_CASE("identity point values from direct arithmetic") {
    // A3 at (n=2, a=0): both sides equal 1 - 2 gamma
    IdentityValue a3 = identity_eval(find_identity("A3"), point_a(2, 0.0));
    CHECK(a3.lhs == Catch::Approx(1.0 - 2.0 * euler_gamma).epsilon(1e-14));
    CHECK(a3.rhs == Catch::Approx(1.0 - 2.0 * euler_gamma).epsilon(1e-14));

    // B2 at (m=2, n=3): 2!/1! + 1!/0! = 3 = 3!/1!/2
    IdentityValue b2 = identity_eval(find_identity("B2"), point_b(2, 3));
    CHECK(b2.lhs == Catch::Approx(3.0).epsilon(1e-14));
    CHECK(b2.rhs == Catch::Approx(3.0).epsilon(1e-14));

    // B3 at (m=2, n=3): 2 + 1/2 = 5/2
    IdentityValue b3 = identity_eval(find_identity("B3"), point_b(2, 3));
    CHECK(b3.lhs == Catch::Approx(2.5).epsilon(1e-14));
    CHECK(b3.rhs == Catch::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("full catalog passes its grids") {
    auto grid_a = first_type_grid();
    auto grid_b = second_type_grid();
    for (const auto& rec : identity_catalog()) {
        bool first = rec.family == IdentityFamily::first_type;
        VerificationReport rep =
            verify_identity(rec, first ? grid_a : grid_b, first ? 1e-10 : 1e-9);
        INFO(rep.id << " max rel error " << rep.max_rel_error << " over " << rep.points
                    << " points");
        CHECK(rep.pass);
        CHECK(rep.points >= 100);
    }
}

TEST_CASE("a corrupted right side is caught") {
    IdentityRecord broken = find_identity("A3");
    broken.rhs = -broken.rhs;
    VerificationReport rep = verify_identity(broken, first_type_grid(10), 1e-10);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_rel_error > 1e-3);
}

TEST_CASE("identity_eval rejects out-of-domain points") {
    CHECK_THROWS_AS(identity_eval(find_identity("A3"), point_a(0, 1.0)), domain_error);
    CHECK_THROWS_AS(identity_eval(find_identity("B2"), point_b(3, 2)), domain_error);
    // B13 carries a psi_j(n-m) term: n = m is a restricted-domain error
    CHECK(find_identity("B13").needs_n_gt_m);
    CHECK_THROWS_AS(identity_eval(find_identity("B13"), point_b(4, 4)), domain_error);
    CHECK_FALSE(find_identity("B12").needs_n_gt_m);
    CHECK_NOTHROW(identity_eval(find_identity("B12"), point_b(4, 4)));
}

TEST_CASE("A18's closed form is the a-derivative of A3's") {
    // central difference in a with h = 1e-5: the psi_1 rows follow from the
    // psi_0 rows by partial differentiation in a
    const IdentityRecord& a3 = find_identity("A3");
    const IdentityRecord& a18 = find_identity("A18");
    for (int n : {2, 7, 19}) {
        for (double a : {0.5, 2.0, 6.25}) {
            const double h = 1e-5;
            double up = expr::eval(a3.rhs.p, point_a(n, a + h));
            double dn = expr::eval(a3.rhs.p, point_a(n, a - h));
            double deriv = (up - dn) / (2.0 * h);
            double direct = expr::eval(a18.rhs.p, point_a(n, a));
            CHECK(deriv == Catch::Approx(direct).epsilon(1e-6));
        }
    }
}

TEST_CASE("the A53-A57 omega term matches the shared omega cache") {
    // at integer a, sum_{k=1}^n psi_1(k+a)/(k+a) is Omega_11 at (m, n) = (n, n+a)
    using namespace expr;
    const Ex n = make(Op::sym_n), a = make(Op::sym_a), k = make(Op::sym_k);
    Ex term = sum_n(psi(1, k + a) / (k + a));
    for (int nn : {3, 9, 17}) {
        for (int aa : {0, 2, 5}) {
            double direct = eval(term.p, point_a(nn, aa));
            double shared = omega(11, nn, nn + aa);
            CHECK(direct == Catch::Approx(shared).epsilon(1e-13));
        }
    }
}

TEST_CASE("B2-B5 hold at non-integer n by analytic continuation") {
    for (const char* id : {"B2", "B3", "B4", "B5"}) {
        const IdentityRecord& rec = find_identity(id);
        for (int m : {1, 2, 5, 9}) {
            for (double n : {m + 0.5, m + 3.25, m + 10.75}) {
                expr::Env e;
                e.m = m;
                e.n = n;
                IdentityValue v = identity_eval(rec, e);
                INFO(id << " m=" << m << " n=" << n);
                CHECK(std::abs(v.lhs - v.rhs) <= 1e-10 * std::max(1.0, std::abs(v.lhs)));
            }
        }
    }
}

TEST_CASE("B13 at n = m through the epsilon-limit machinery") {
    // lhs at n = m is sum 1/k^2 = psi_1(1) - psi_1(m+1). The printed rhs has
    // the indeterminate product psi_0(n-m) (psi_0(n+1) - psi_0(m+1) - ...);
    // build the rhs as a series in eps = n - m and take the finite part.
    for (int m : {2, 4, 7, 12}) {
        double lhs = 0.0;
        for (int k = 1; k <= m; ++k) lhs += 1.0 / (static_cast<double>(k) * k);

        // n!/m! -> Gamma(m+1+eps)/Gamma(m+1)
        EpsSeries pref = gamma_eps(m + 1.0);
        for (auto& c : pref.c) c /= std::tgamma(m + 1.0);
        // Omega_1 term: sum psi_0(k+eps)/k over k = 1..m
        EpsSeries o1 = EpsSeries::constant(0.0);
        for (int k = 1; k <= m; ++k)
            o1 = o1 + (1.0 / k) * psi_eps(0, static_cast<double>(k));
        EpsSeries closed =
            0.5 * (psi_eps(1, 1.0) - psi_eps(1, m + 1.0) +
                   psi_eps(0, 1.0) * psi_eps(0, 1.0) -
                   psi_eps(0, m + 1.0) * psi_eps(0, m + 1.0)) +
            psi_eps(0, 0.0) *
                (psi_eps(0, m + 1.0) - EpsSeries::constant(polygamma_int(0, m + 1)) -
                 psi_eps(0, 1.0) + EpsSeries::constant(polygamma_int(0, 1)));
        EpsSeries rhs = pref * (o1 + closed);
        INFO("m=" << m << " finite part " << rhs.coeff(0) << " lhs " << lhs);
        CHECK(rhs.coeff(-1) == Catch::Approx(0.0).margin(1e-10));  // poles cancel
        CHECK(rhs.coeff(0) == Catch::Approx(lhs).epsilon(1e-10));
    }
}

TEST_CASE("first-type order-swap reduction equals direct summation") {
    auto direct = [](const std::function<double(std::int64_t)>& f, int order, int n,
                     double a) {
        double s = 0.0;
        for (std::int64_t k = 1; k <= n; ++k) s += f(k) * polygamma_real(order, k + a);
        return s;
    };
    auto unit = [](std::int64_t) { return 1.0; };
    CHECK(first_type_reduce(unit, 0, 3, 1.0) ==
          Catch::Approx(direct(unit, 0, 3, 1.0)).epsilon(1e-13));
    auto linear = [](std::int64_t k) { return static_cast<double>(k); };
    CHECK(first_type_reduce(linear, 1, 5, 0.5) ==
          Catch::Approx(direct(linear, 1, 5, 0.5)).epsilon(1e-12));
    auto psi_f = [](std::int64_t k) { return polygamma_int(0, k); };
    CHECK(first_type_reduce(psi_f, 0, 4, 2.0) ==
          Catch::Approx(direct(psi_f, 0, 4, 2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(first_type_reduce(unit, 0, 3, 0.0), domain_error);
}

TEST_CASE("second-type recursion equals direct summation") {
    auto direct = [](const std::function<double(std::int64_t)>& f0, int m, int n) {
        double s = 0.0;
        for (std::int64_t k = 1; k <= m; ++k)
            s += factorial_ratio(n - static_cast<double>(k), m - static_cast<double>(k)) *
                 f0(k) / static_cast<double>(k);
        return s;
    };
    auto unit = [](std::int64_t) { return 1.0; };
    CHECK(second_type_recursion(unit, 2, 3) == Catch::Approx(2.5).epsilon(1e-13));
    CHECK(second_type_recursion(unit, 2, 3) ==
          Catch::Approx(direct(unit, 2, 3)).epsilon(1e-13));
    auto psi_f = [](std::int64_t k) { return polygamma_int(0, k); };
    CHECK(second_type_recursion(psi_f, 3, 5) ==
          Catch::Approx(direct(psi_f, 3, 5)).epsilon(1e-11));
    // m = 1 collapses to a single term
    CHECK(second_type_recursion(unit, 1, 3) ==
          Catch::Approx(direct(unit, 1, 3)).epsilon(1e-13));
    CHECK_THROWS_AS(second_type_recursion(unit, 3, 3), domain_error);
}

TEST_CASE("the shipped catalog file matches the built-in catalog") {
    std::ifstream in(QENT_DATA_DIR "/identities.json");
    REQUIRE(in.good());
    nlohmann::json doc = nlohmann::json::parse(in);
    CHECK(doc.dump() == catalog_to_json().dump());
}

TEST_CASE("catalog JSON round trip") {
    nlohmann::json doc = catalog_to_json();
    CHECK(doc["schema"] == "qent-identities/1");
    auto loaded = catalog_from_json(doc);
    REQUIRE(loaded.size() == identity_catalog().size());
    // every reloaded record evaluates identically to the built-in one
    auto grid_a = first_type_grid(6, {0.0, 0.5});
    auto grid_b = second_type_grid(8);
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        const auto& orig = identity_catalog()[i];
        const auto& back = loaded[i];
        CHECK(back.id == orig.id);
        const auto& grid = orig.family == IdentityFamily::first_type ? grid_a : grid_b;
        for (const auto& env : grid) {
            if (orig.family == IdentityFamily::second_type && orig.needs_n_gt_m &&
                env.n == env.m)
                continue;
            IdentityValue v0 = identity_eval(orig, env);
            IdentityValue v1 = identity_eval(back, env);
            CHECK(v0.lhs == v1.lhs);
            CHECK(v0.rhs == v1.rhs);
        }
    }
    // serialization is stable
    CHECK(catalog_to_json().dump() == doc.dump());
}
