#pragma once

// Command-line front end. Every capability is reachable through a subcommand
// with machine-readable output: JSON documents carry a schema tag and an echo
// of the parsed configuration; CSV uses '.' decimals and 17 significant
// digits. Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numeric failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qent/cumulants.hpp"
#include "qent/density.hpp"
#include "qent/ensemble.hpp"
#include "qent/identities.hpp"
#include "qent/kernel.hpp"

namespace qent::cli {

using nlohmann::json;

namespace detail {

inline std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("QENT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

inline json base_document(const std::string& command, json config) {
    json doc;
    doc["schema"] = "qent/1";
    doc["command"] = command;
    doc["config"] = std::move(config);
    doc["timestamp"] = iso_timestamp();
    return doc;
}

inline json cumulants_json(const CumulantSet& k) {
    return {{"k1", k.k1}, {"k2", k.k2}, {"k3", k.k3}, {"k4", k.k4}};
}

struct GridSpec {
    double lo = -6.0, hi = 2.0, step = 0.05;
};

inline GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char c1, c2;
    std::istringstream is(text);
    if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.step) || c1 != ':' || c2 != ':' ||
        !(g.hi > g.lo) || !(g.step > 0.0))
        throw domain_error("--grid expects LO:HI:STEP with HI > LO, STEP > 0");
    return g;
}

}  // namespace detail

struct Io {
    std::ostream& out;
    std::ostream& err;
};

inline int cmd_cumulants(SystemDims dims, const std::string& format, const Io& io) {
    CumulantSet k = hs_cumulants(dims);
    CoefficientSet c = hs_coefficients(dims);
    std::optional<double> skew, kurt;
    if (dims.m >= 2) {
        skew = skewness(dims);
        kurt = kurtosis(dims);
    }
    if (format == "csv") {
        io.out << "quantity,value\n";
        auto row = [&](const char* name, double v) {
            io.out << name << ',' << detail::fmt17(v) << '\n';
        };
        row("k1", k.k1);
        row("k2", k.k2);
        row("k3", k.k3);
        row("k4", k.k4);
        if (skew) row("skewness", *skew);
        if (kurt) row("kurtosis", *kurt);
        const double co[] = {c.a1, c.a2, c.a3, c.b1, c.b2, c.b3, c.c1, c.c2,
                             c.c3, c.c4, c.d1, c.d2, c.d3, c.d4, c.d5, c.d6};
        const char* names[] = {"a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2",
                               "c3", "c4", "d1", "d2", "d3", "d4", "d5", "d6"};
        for (int i = 0; i < 16; ++i) row(names[i], co[i]);
        return 0;
    }
    json doc = detail::base_document(
        "cumulants", {{"m", dims.m}, {"n", dims.n}, {"format", format}});
    doc["cumulants"] = detail::cumulants_json(k);
    doc["coefficients"] = {{"a1", c.a1}, {"a2", c.a2}, {"a3", c.a3}, {"b1", c.b1},
                           {"b2", c.b2}, {"b3", c.b3}, {"c1", c.c1}, {"c2", c.c2},
                           {"c3", c.c3}, {"c4", c.c4}, {"d1", c.d1}, {"d2", c.d2},
                           {"d3", c.d3}, {"d4", c.d4}, {"d5", c.d5}, {"d6", c.d6}};
    doc["skewness"] = skew ? json(*skew) : json();
    doc["kurtosis"] = kurt ? json(*kurt) : json();
    io.out << doc.dump(2) << '\n';
    return 0;
}

inline int cmd_mc(SystemDims dims, std::int64_t samples, RngConfig rng, int threads,
                  const Io& io) {
    io.err << "sampling " << samples << " draws at (m,n)=(" << dims.m << ',' << dims.n
           << ") over " << rng.streams << " streams, " << threads << " threads\n";
    McEstimate est = mc_entropy_cumulants(dims, samples, rng, threads);
    CumulantSet exact = hs_cumulants(dims);
    json doc = detail::base_document("mc", {{"m", dims.m},
                                            {"n", dims.n},
                                            {"samples", samples},
                                            {"seed", rng.seed},
                                            {"streams", rng.streams},
                                            {"threads", threads}});
    const double est_k[4] = {est.k.k1, est.k.k2, est.k.k3, est.k.k4};
    const double ex_k[4] = {exact.k1, exact.k2, exact.k3, exact.k4};
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        rows.push_back({{"order", i + 1},
                        {"estimate", est_k[i]},
                        {"standard_error", est.se[i]},
                        {"exact", ex_k[i]},
                        {"delta", est_k[i] - ex_k[i]},
                        {"delta_over_se",
                         est.se[i] > 0 ? (est_k[i] - ex_k[i]) / est.se[i] : 0.0}});
    }
    doc["k_statistics"] = std::move(rows);
    io.out << doc.dump(2) << '\n';
    return 0;
}

inline int cmd_density(SystemDims dims, std::int64_t samples, detail::GridSpec grid,
                       const std::string& order, RngConfig rng, int threads,
                       const Io& io) {
    CumulantSet k = hs_cumulants(dims);
    if (!(k.k2 > 0.0)) throw domain_error("density: degenerate distribution at m = 1");
    int bins = static_cast<int>(std::lround((grid.hi - grid.lo) / grid.step));
    Histogram h = make_histogram(grid.lo, grid.lo + bins * grid.step, bins);
    io.err << "sampling " << samples << " standardized draws at (m,n)=(" << dims.m
           << ',' << dims.n << ")\n";
    sample_standardized_histogram(dims, k, samples, rng, threads, h);
    bool want_k3 = order == "k3" || order == "k4";
    bool want_k4 = order == "k4";
    io.out << "x,empirical,gaussian";
    if (want_k3) io.out << ",k3";
    if (want_k4) io.out << ",k4";
    io.out << '\n';
    for (int b = 0; b < h.bins(); ++b) {
        double x = h.center(b);
        io.out << detail::fmt17(x) << ',' << detail::fmt17(h.density(b)) << ','
               << detail::fmt17(gram_charlier_pdf(x, k, DensityOrder::gaussian));
        if (want_k3)
            io.out << ',' << detail::fmt17(gram_charlier_pdf(x, k, DensityOrder::k3));
        if (want_k4)
            io.out << ',' << detail::fmt17(gram_charlier_pdf(x, k, DensityOrder::k4));
        io.out << '\n';
    }
    return 0;
}

inline int cmd_verify_identities(const std::string& suite, double tol_a, double tol_b,
                                 const std::string& dump_path,
                                 const std::string& catalog_path, const Io& io) {
    std::vector<IdentityRecord> loaded;
    const std::vector<IdentityRecord>* records = &identity_catalog();
    if (!catalog_path.empty()) {
        std::ifstream in(catalog_path);
        if (!in) throw domain_error("cannot open catalog file: " + catalog_path);
        json doc = json::parse(in);
        loaded = catalog_from_json(doc);
        records = &loaded;
    }
    if (!dump_path.empty()) {
        std::ofstream outf(dump_path);
        if (!outf) throw domain_error("cannot write catalog file: " + dump_path);
        outf << catalog_to_json().dump(1) << '\n';
        io.err << "catalog dumped to " << dump_path << '\n';
    }
    auto grid_a = first_type_grid();
    auto grid_b = second_type_grid();
    json doc = detail::base_document(
        "verify identities",
        {{"suite", suite},
         {"tol_first_type", tol_a},
         {"tol_second_type", tol_b},
         {"catalog", catalog_path.empty() ? "built-in" : catalog_path}});
    json reports = json::array();
    bool all_pass = true;
    for (const auto& rec : *records) {
        bool first = rec.family == IdentityFamily::first_type;
        if (suite == "A" && !first) continue;
        if (suite == "B" && first) continue;
        VerificationReport rep =
            verify_identity(rec, first ? grid_a : grid_b, first ? tol_a : tol_b);
        all_pass = all_pass && rep.pass;
        reports.push_back({{"id", rep.id},
                           {"points", rep.points},
                           {"max_rel_error", rep.max_rel_error},
                           {"pass", rep.pass}});
    }
    doc["reports"] = std::move(reports);
    doc["pass"] = all_pass;
    io.out << doc.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

inline int cmd_verify_integrals(SystemDims dims, double tol, const Io& io) {
    KernelIntegrals r = integrals_IA_to_ID(dims);
    double via_integrals = r.IA - 3.0 * r.IB1 - 4.0 * r.IB2 + 12.0 * r.IC - 6.0 * r.ID;
    double closed = induced_cumulants(dims).k4T;
    double rel = std::abs(via_integrals - closed) / std::max(1.0, std::abs(closed));
    bool pass = rel <= tol;
    json doc = detail::base_document("verify integrals",
                                     {{"m", dims.m}, {"n", dims.n}, {"tol", tol}});
    doc["integrals"] = {{"IA", r.IA}, {"IB1", r.IB1}, {"IB2", r.IB2},
                        {"IC", r.IC}, {"ID", r.ID}};
    doc["k4T_via_integrals"] = via_integrals;
    doc["k4T_closed_form"] = closed;
    doc["rel_error"] = rel;
    doc["pass"] = pass;
    io.out << doc.dump(2) << '\n';
    return pass ? 0 : 1;
}

inline int cmd_verify_oracle(int n, const Io& io) {
    CumulantSet oracle = m2_oracle_cumulants(n);
    CumulantSet exact = hs_cumulants(SystemDims(2, n));
    json doc = detail::base_document("verify oracle", {{"n", n}});
    const double o[4] = {oracle.k1, oracle.k2, oracle.k3, oracle.k4};
    const double e[4] = {exact.k1, exact.k2, exact.k3, exact.k4};
    bool pass = true;
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        // relative 1e-8, absolute 1e-10 where the value is below 1e-4
        double tol = std::abs(e[i]) < 1e-4 ? 1e-10 : 1e-8 * std::abs(e[i]);
        bool ok = std::abs(o[i] - e[i]) <= tol;
        pass = pass && ok;
        rows.push_back({{"order", i + 1},
                        {"oracle", o[i]},
                        {"exact", e[i]},
                        {"abs_error", std::abs(o[i] - e[i])},
                        {"pass", ok}});
    }
    doc["cumulants"] = std::move(rows);
    doc["pass"] = pass;
    io.out << doc.dump(2) << '\n';
    return pass ? 0 : 1;
}

inline int cmd_kurtosis_scan(const std::vector<int>& sizes, const Io& io) {
    json doc = detail::base_document("kurtosis-scan", {{"sizes", sizes}});
    json rows = json::array();
    for (int m : sizes) {
        SystemDims d(m, m);
        rows.push_back({{"m", m},
                        {"kurtosis", kurtosis(d)},
                        {"skewness", skewness(d)},
                        {"k4", hs_cumulants(d).k4}});
    }
    doc["scan"] = std::move(rows);
    io.out << doc.dump(2) << '\n';
    return 0;
}

/// Parses argv (program name excluded) and dispatches; returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    Io io{out, err};
    CLI::App app{"exact cumulants, density approximations and verification "
                 "oracles for von Neumann entanglement entropy"};
    app.name("qent");
    app.require_subcommand(1);

    int m = 2, n = 2;
    std::int64_t samples = 1000000;
    std::uint64_t seed = 0;
    int threads = 0;
    int streams = 64;
    std::string format = "json";
    std::string grid_text = "-6:2:0.05";
    std::string order = "k4";
    std::string suite = "all";
    double tol_override = 0.0;
    std::string dump_path, catalog_path;
    std::string sizes_text = "5,10,20,40,80";
    int oracle_n = 2;

    auto* cum = app.add_subcommand("cumulants", "exact first four cumulants");
    cum->add_option("--m", m, "smaller subsystem dimension")->required();
    cum->add_option("--n", n, "larger subsystem dimension")->required();
    cum->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* mc = app.add_subcommand("mc", "Monte Carlo k-statistics vs exact values");
    mc->add_option("--m", m)->required();
    mc->add_option("--n", n)->required();
    mc->add_option("--samples", samples, "number of draws");
    mc->add_option("--seed", seed, "RNG seed");
    mc->add_option("--threads", threads, "worker threads (default: hardware)");
    mc->add_option("--streams", streams, "independent RNG substreams");

    auto* dens = app.add_subcommand("density", "plot-ready standardized density CSV");
    dens->add_option("--m", m)->required();
    dens->add_option("--n", n)->required();
    dens->add_option("--samples", samples);
    dens->add_option("--grid", grid_text, "histogram grid LO:HI:STEP");
    dens->add_option("--order", order, "gaussian, k3 or k4")
        ->check(CLI::IsMember({"gaussian", "k3", "k4"}));
    dens->add_option("--seed", seed);
    dens->add_option("--threads", threads);
    dens->add_option("--streams", streams);

    auto* verify = app.add_subcommand("verify", "numerical verification suites");
    verify->require_subcommand(1);
    auto* vid = verify->add_subcommand("identities", "polygamma identity catalog");
    vid->add_option("--suite", suite, "A, B or all")
        ->check(CLI::IsMember({"A", "B", "all"}));
    vid->add_option("--tol", tol_override, "override tolerance for both families");
    vid->add_option("--dump", dump_path, "write the catalog as JSON");
    vid->add_option("--catalog", catalog_path, "re-verify a JSON catalog file");
    auto* vint = verify->add_subcommand("integrals", "I_A..I_D vs closed-form k4T");
    vint->add_option("--m", m)->required();
    vint->add_option("--n", n)->required();
    auto* vor = verify->add_subcommand("oracle", "m=2 quadrature vs closed forms");
    vor->add_option("--n", oracle_n, "larger dimension (m fixed at 2)")->required();

    auto* scan = app.add_subcommand("kurtosis-scan", "gamma_2 along the m = n diagonal");
    scan->add_option("--sizes", sizes_text, "comma-separated m values");

    try {
        // CLI11's vector overload expects reversed arguments
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*cum) return cmd_cumulants(SystemDims(m, n), format, io);
        if (*mc) {
            RngConfig cfg;
            cfg.seed = seed;
            cfg.streams = streams;
            return cmd_mc(SystemDims(m, n), samples, cfg,
                          detail::resolve_threads(threads), io);
        }
        if (*dens) {
            RngConfig cfg;
            cfg.seed = seed;
            cfg.streams = streams;
            return cmd_density(SystemDims(m, n), samples, detail::parse_grid(grid_text),
                               order, cfg, detail::resolve_threads(threads), io);
        }
        if (*vid) {
            double tol_a = tol_override > 0.0 ? tol_override : 1e-10;
            double tol_b = tol_override > 0.0 ? tol_override : 1e-9;
            return cmd_verify_identities(suite, tol_a, tol_b, dump_path, catalog_path,
                                         io);
        }
        if (*vint) return cmd_verify_integrals(SystemDims(m, n), 1e-6, io);
        if (*vor) return cmd_verify_oracle(oracle_n, io);
        if (*scan) {
            std::vector<int> sizes;
            std::istringstream is(sizes_text);
            std::string tok;
            while (std::getline(is, tok, ',')) sizes.push_back(std::stoi(tok));
            if (sizes.empty()) throw domain_error("kurtosis-scan: empty --sizes");
            return cmd_kurtosis_scan(sizes, io);
        }
    } catch (const domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        json diag;
        diag["schema"] = "qent/1";
        diag["error"] = e.what();
        out << diag.dump(2) << '\n';
        err << "numeric failure: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace qent::cli
