#pragma once

// Catalog of the finite polygamma summation identities (first type: sums over
// k = 1..n of k^c psi products; second type: sums with the (n-k)!/(m-k)!
// kernel), the Omega bases they reduce to, and the verification machinery.
//
// Identities are data: each record holds its printed left and right sides as
// small expression trees over {numbers, m, n, a, k, arithmetic, psi_j,
// factorial, inner sums}. One interpreter evaluates both sides, the grid
// runner compares them, and the whole catalog round-trips through JSON.

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "qent/specfun.hpp"

namespace qent {

namespace expr {

enum class Op {
    num,   // literal
    sym_m,
    sym_n,
    sym_a,
    sym_k,
    add,
    sub,
    mul,
    div,
    neg,
    pow,   // integer exponent in `value`
    psi,   // order in `value`, one child
    fact,  // Gamma(child + 1)
    sum_n, // sum over k = 1..n of child
    sum_m, // sum over k = 1..m of child
};

struct Node;
using Ptr = std::shared_ptr<const Node>;

struct Node {
    Op op;
    double value = 0.0;  // literal, psi order, or pow exponent
    Ptr left, right;
};

/// Thin value wrapper so the catalog reads like the printed formulas.
struct Ex {
    Ptr p;
};

inline Ex make(Op op, double v = 0.0, Ptr l = nullptr, Ptr r = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->value = v;
    n->left = std::move(l);
    n->right = std::move(r);
    return Ex{n};
}

inline Ex num(double v) { return make(Op::num, v); }
inline Ex operator+(Ex x, Ex y) { return make(Op::add, 0, x.p, y.p); }
inline Ex operator-(Ex x, Ex y) { return make(Op::sub, 0, x.p, y.p); }
inline Ex operator*(Ex x, Ex y) { return make(Op::mul, 0, x.p, y.p); }
inline Ex operator/(Ex x, Ex y) { return make(Op::div, 0, x.p, y.p); }
inline Ex operator-(Ex x) { return make(Op::neg, 0, x.p); }
inline Ex operator+(double v, Ex y) { return num(v) + y; }
inline Ex operator+(Ex x, double v) { return x + num(v); }
inline Ex operator-(double v, Ex y) { return num(v) - y; }
inline Ex operator-(Ex x, double v) { return x - num(v); }
inline Ex operator*(double v, Ex y) { return num(v) * y; }
inline Ex operator*(Ex x, double v) { return x * num(v); }
inline Ex operator/(double v, Ex y) { return num(v) / y; }
inline Ex operator/(Ex x, double v) { return x / num(v); }

inline Ex pw(Ex x, int e) { return make(Op::pow, e, x.p); }
inline Ex sq(Ex x) { return pw(x, 2); }
inline Ex cu(Ex x) { return pw(x, 3); }
inline Ex p4(Ex x) { return pw(x, 4); }
inline Ex p5(Ex x) { return pw(x, 5); }
inline Ex psi(int order, Ex arg) { return make(Op::psi, order, arg.p); }
inline Ex fact(Ex arg) { return make(Op::fact, 0, arg.p); }
inline Ex sum_n(Ex body) { return make(Op::sum_n, 0, body.p); }
inline Ex sum_m(Ex body) { return make(Op::sum_m, 0, body.p); }

struct Env {
    double m = 0.0, n = 0.0, a = 0.0, k = 0.0;
};

inline double eval(const Ptr& e, Env env);

inline double eval_sum(const Ptr& body, Env env, double upper) {
    std::int64_t top = static_cast<std::int64_t>(std::llround(upper));
    double sum = 0.0, comp = 0.0;
    for (std::int64_t k = 1; k <= top; ++k) {
        env.k = static_cast<double>(k);
        double y = eval(body, env) - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

inline double eval_fact(double x) {
    if (!(x > -1.0)) throw domain_error("identity eval: factorial below -1");
    double r = std::round(x);
    if (std::abs(x - r) < 1e-9 && r >= 0.0 && r <= 170.0)
        return factorial(static_cast<std::int64_t>(r));
    return std::tgamma(x + 1.0);
}

inline double eval_psi(int order, double x) {
    double r = std::round(x);
    if (std::abs(x - r) < 1e-9) {
        if (r < 1.0) throw domain_error("identity eval: psi at non-positive integer");
        if (order <= 3 && r < 5e8) return polygamma_int(order, static_cast<std::int64_t>(r));
    }
    return polygamma_real(order, x);
}

inline double eval(const Ptr& e, Env env) {
    switch (e->op) {
        case Op::num: return e->value;
        case Op::sym_m: return env.m;
        case Op::sym_n: return env.n;
        case Op::sym_a: return env.a;
        case Op::sym_k: return env.k;
        case Op::add: return eval(e->left, env) + eval(e->right, env);
        case Op::sub: return eval(e->left, env) - eval(e->right, env);
        case Op::mul: return eval(e->left, env) * eval(e->right, env);
        case Op::div: return eval(e->left, env) / eval(e->right, env);
        case Op::neg: return -eval(e->left, env);
        case Op::pow: {
            double b = eval(e->left, env);
            int p = static_cast<int>(e->value);
            double r = 1.0;
            for (int i = 0; i < p; ++i) r *= b;
            return r;
        }
        case Op::psi: return eval_psi(static_cast<int>(e->value), eval(e->left, env));
        case Op::fact: return eval_fact(eval(e->left, env));
        case Op::sum_n: return eval_sum(e->left, env, env.n);
        case Op::sum_m: return eval_sum(e->left, env, env.m);
    }
    throw numeric_error("identity eval: unknown node");
}

inline const char* op_name(Op op) {
    switch (op) {
        case Op::num: return "num";
        case Op::sym_m: return "m";
        case Op::sym_n: return "n";
        case Op::sym_a: return "a";
        case Op::sym_k: return "k";
        case Op::add: return "add";
        case Op::sub: return "sub";
        case Op::mul: return "mul";
        case Op::div: return "div";
        case Op::neg: return "neg";
        case Op::pow: return "pow";
        case Op::psi: return "psi";
        case Op::fact: return "fact";
        case Op::sum_n: return "sum_n";
        case Op::sum_m: return "sum_m";
    }
    return "?";
}

inline nlohmann::json to_json(const Ptr& e) {
    nlohmann::json j;
    j["op"] = op_name(e->op);
    if (e->op == Op::num || e->op == Op::pow || e->op == Op::psi) j["v"] = e->value;
    if (e->left) j["l"] = to_json(e->left);
    if (e->right) j["r"] = to_json(e->right);
    return j;
}

inline Ptr from_json(const nlohmann::json& j) {
    std::string op = j.at("op").get<std::string>();
    double v = j.contains("v") ? j["v"].get<double>() : 0.0;
    Ptr l = j.contains("l") ? from_json(j["l"]) : nullptr;
    Ptr r = j.contains("r") ? from_json(j["r"]) : nullptr;
    for (Op candidate :
         {Op::num, Op::sym_m, Op::sym_n, Op::sym_a, Op::sym_k, Op::add, Op::sub, Op::mul,
          Op::div, Op::neg, Op::pow, Op::psi, Op::fact, Op::sum_n, Op::sum_m}) {
        if (op == op_name(candidate)) return make(candidate, v, l, r).p;
    }
    throw domain_error("identity catalog: unknown op '" + op + "'");
}

}  // namespace expr

/// Unsimplifiable bases Omega_1..Omega_17: finite polygamma sums over
/// k = 1..m with arguments k+n-m, by direct compensated summation.
inline double omega(int index, int m, int n) {
    if (index < 1 || index > 17) throw domain_error("omega: index must be in 1..17");
    if (m < 1 || n < m) throw domain_error("omega: need 1 <= m <= n");
    auto p = [&](int j, std::int64_t arg) { return polygamma_int(j, arg); };
    double sum = 0.0, comp = 0.0;
    auto acc = [&](double term) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (std::int64_t k = 1; k <= m; ++k) {
        std::int64_t s = k + n - m;
        double kk = static_cast<double>(k), ss = static_cast<double>(s);
        switch (index) {
            case 1: acc(p(0, s) / kk); break;
            case 2: acc(p(0, s) * p(0, s) / kk); break;
            case 3: acc(p(1, s) / kk); break;
            case 4: acc(p(0, s) / (kk * kk)); break;
            case 5: acc(p(0, s) * p(0, s) / (kk * kk)); break;
            case 6: acc(p(0, s) * p(0, s) / ss); break;
            case 7: acc(p(0, s) * p(0, k) / kk); break;
            case 8: acc(p(0, s) * p(0, s) * p(0, s) / kk); break;
            case 9: acc(p(0, s) * p(0, s) * p(0, k) / kk); break;
            case 10: acc(p(0, s) * p(0, s) * p(0, s) / ss); break;
            case 11: acc(p(1, s) / ss); break;
            case 12: acc(p(0, s) * p(1, s) / kk); break;
            case 13: acc(p(1, s) * p(0, k) / kk); break;
            case 14: acc(p(0, s) * p(1, s) / ss); break;
            case 15: acc(p(2, s) / kk); break;
            case 16: acc(p(2, s) / ss); break;
            case 17: acc(p(0, s) / kk); break;  // squared below
        }
    }
    return index == 17 ? sum * sum : sum;
}

enum class IdentityFamily { first_type, second_type };

struct IdentityRecord {
    std::string id;
    IdentityFamily family;
    bool needs_n_gt_m = false;  // second-type records containing psi_j(n-m)
    std::string notes;
    expr::Ex lhs, rhs;
};

/// Both sides of an identity at one parameter point. First-type points use
/// (n, a); second-type use (m, n) (B12 additionally reads a).
struct IdentityValue {
    double lhs, rhs;
};

inline IdentityValue identity_eval(const IdentityRecord& rec, expr::Env env) {
    if (rec.family == IdentityFamily::first_type) {
        if (env.n < 1 || env.a <= -1.0)
            throw domain_error("identity_eval: first-type domain is n >= 1, a > -1");
    } else {
        if (env.m < 1 || env.n < env.m)
            throw domain_error("identity_eval: second-type domain is 1 <= m <= n");
        if (rec.needs_n_gt_m && env.n == env.m)
            throw domain_error("identity_eval: " + rec.id + " requires n > m");
    }
    return {expr::eval(rec.lhs.p, env), expr::eval(rec.rhs.p, env)};
}

struct VerificationReport {
    std::string id;
    int points = 0;
    double max_rel_error = 0.0;
    bool pass = false;
};

/// Runs one identity over a parameter grid; errors are measured as
/// |lhs - rhs| / max(1, |lhs|) per point.
inline VerificationReport verify_identity(const IdentityRecord& rec,
                                          const std::vector<expr::Env>& grid,
                                          double tolerance) {
    VerificationReport rep;
    rep.id = rec.id;
    for (const expr::Env& env : grid) {
        if (rec.family == IdentityFamily::second_type && rec.needs_n_gt_m &&
            env.n == env.m)
            continue;
        IdentityValue v = identity_eval(rec, env);
        double err = std::abs(v.lhs - v.rhs) / std::max(1.0, std::abs(v.lhs));
        rep.max_rel_error = std::max(rep.max_rel_error, err);
        rep.points += 1;
    }
    rep.pass = rep.max_rel_error <= tolerance;
    return rep;
}

inline std::vector<expr::Env> first_type_grid(int n_max = 25,
                                              std::vector<double> a_values = {0.0, 0.5, 1.0,
                                                                              2.75, 7.0}) {
    std::vector<expr::Env> grid;
    for (int n = 1; n <= n_max; ++n)
        for (double a : a_values) {
            expr::Env e;
            e.n = n;
            e.a = a;
            grid.push_back(e);
        }
    return grid;
}

inline std::vector<expr::Env> second_type_grid(int n_max = 25) {
    std::vector<expr::Env> grid;
    for (int m = 1; m <= n_max; ++m)
        for (int n = m; n <= n_max; ++n) {
            expr::Env e;
            e.m = m;
            e.n = n;
            e.a = 0.5;  // only B12 reads it
            grid.push_back(e);
        }
    return grid;
}

// Catalog construction lives in the detail headers; the definition is pulled
// in by qent/detail/catalog.hpp at the end of this header.
inline const std::vector<IdentityRecord>& identity_catalog();

inline const IdentityRecord& find_identity(const std::string& id) {
    for (const auto& rec : identity_catalog())
        if (rec.id == id) return rec;
    throw domain_error("unknown identity id: " + id);
}

inline nlohmann::json catalog_to_json() {
    nlohmann::json doc;
    doc["schema"] = "qent-identities/1";
    nlohmann::json list = nlohmann::json::array();
    for (const auto& rec : identity_catalog()) {
        nlohmann::json j;
        j["id"] = rec.id;
        j["family"] = rec.family == IdentityFamily::first_type ? "first" : "second";
        if (rec.family == IdentityFamily::first_type) {
            j["domain"] = {{"n", "1.."}, {"a", "> -1"}};
        } else {
            j["domain"] = {{"m", "1.."}, {"n", rec.needs_n_gt_m ? "> m" : ">= m"}};
        }
        j["needs_n_gt_m"] = rec.needs_n_gt_m;
        if (!rec.notes.empty()) j["notes"] = rec.notes;
        j["lhs"] = expr::to_json(rec.lhs.p);
        j["rhs"] = expr::to_json(rec.rhs.p);
        list.push_back(std::move(j));
    }
    doc["identities"] = std::move(list);
    return doc;
}

inline std::vector<IdentityRecord> catalog_from_json(const nlohmann::json& doc) {
    if (doc.at("schema").get<std::string>() != "qent-identities/1")
        throw domain_error("identity catalog: unsupported schema");
    std::vector<IdentityRecord> out;
    for (const auto& j : doc.at("identities")) {
        IdentityRecord rec;
        rec.id = j.at("id").get<std::string>();
        rec.family = j.at("family").get<std::string>() == "first"
                         ? IdentityFamily::first_type
                         : IdentityFamily::second_type;
        rec.needs_n_gt_m = j.value("needs_n_gt_m", false);
        rec.notes = j.value("notes", std::string());
        rec.lhs = expr::Ex{expr::from_json(j.at("lhs"))};
        rec.rhs = expr::Ex{expr::from_json(j.at("rhs"))};
        out.push_back(std::move(rec));
    }
    return out;
}

/// First-type order swap: sum_{k=1}^n f(k) psi_i(k+a) rewritten through the
/// polygamma recurrence as
///   psi_i(a) sum_k f(k) + sum_{l=1}^n (-1)^i i!/(a+l-1)^{i+1} sum_{k=l}^n f(k).
/// Requires a > 0 (psi_i(a) must be finite).
inline double first_type_reduce(const std::function<double(std::int64_t)>& f, int order,
                                int n, double a) {
    if (!(a > 0.0)) throw domain_error("first_type_reduce: need a > 0");
    double fact = 1.0;
    for (int i = 2; i <= order; ++i) fact *= i;
    double sign = (order % 2 == 0) ? 1.0 : -1.0;
    // suffix sums of f
    std::vector<double> suffix(static_cast<std::size_t>(n) + 2, 0.0);
    for (std::int64_t k = n; k >= 1; --k)
        suffix[k] = suffix[k + 1] + f(k);
    double total = polygamma_real(order, a) * suffix[1];
    double comp = 0.0;
    for (std::int64_t l = 1; l <= n; ++l) {
        double term = sign * fact * std::pow(a + l - 1.0, -(order + 1.0)) * suffix[l];
        double y = term - comp;
        double t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    return total;
}

/// Second-type recursion: S_f(m, n) with f(k) = f0(k)/k unrolled m times into
///   (n! (n-m)/m!) sum_{i=0}^{m-1} ((m-i-1)!/(n-i)!)
///                  sum_{k=1}^{m-i} ((n-i-1-k)!/(m-i-k)!) f0(k).
/// The unrolled form needs n > m (at n = m the prefactor vanishes against a
/// diverging inner term).
inline double second_type_recursion(const std::function<double(std::int64_t)>& f0, int m,
                                    int n) {
    if (m < 1 || n <= m)
        throw domain_error("second_type_recursion: domain is 1 <= m < n");
    double outer = 0.0;
    for (int i = 0; i <= m - 1; ++i) {
        double inner = 0.0;
        for (std::int64_t k = 1; k <= m - i; ++k)
            inner += factorial_ratio(n - i - 1.0 - k, m - i - static_cast<double>(k)) *
                     f0(k);
        outer += factorial_ratio(m - i - 1.0, n - static_cast<double>(i)) * inner;
    }
    return factorial_ratio(n, m) * (n - m) * outer;
}

}  // namespace qent

#include "qent/detail/catalog.hpp"  // defines identity_catalog()
