#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "json.hpp"
#include "qent/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = qent::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json parsed(const CliResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("cumulants subcommand emits the schema-tagged document") {
    CliResult r = cli({"cumulants", "--m", "2", "--n", "2"});
    REQUIRE(r.code == 0);
    json doc = parsed(r);
    CHECK(doc["schema"] == "qent/1");
    CHECK(doc["command"] == "cumulants");
    CHECK(doc["config"]["m"] == 2);
    CHECK(doc.contains("timestamp"));
    CHECK(doc["cumulants"]["k1"].get<double>() == Catch::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(doc["coefficients"]["d1"].get<double>() == -1.0);
    CHECK(doc["kurtosis"].is_number());
}

TEST_CASE("cumulants at m = 1 are all zero with null shape parameters") {
    CliResult r = cli({"cumulants", "--m", "1", "--n", "9", "--format", "json"});
    REQUIRE(r.code == 0);
    json doc = parsed(r);
    for (const char* key : {"k1", "k2", "k3", "k4"})
        CHECK(std::abs(doc["cumulants"][key].get<double>()) <= 1e-12);
    CHECK(doc["skewness"].is_null());
    CHECK(doc["kurtosis"].is_null());
}

TEST_CASE("cumulants csv format uses plain 17-digit decimals") {
    CliResult r = cli({"cumulants", "--m", "3", "--n", "4", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("quantity,value\n", 0) == 0);
    CHECK(r.out.find("k1,0.") != std::string::npos);
    CHECK(r.out.find(',') != std::string::npos);
    CHECK(r.out.find(';') == std::string::npos);  // no locale separators
}

TEST_CASE("unknown flags give a usage error with exit 2") {
    CliResult r = cli({"cumulants", "--m", "2", "--n", "2", "--bogus"});
    CHECK(r.code == 2);
    CliResult r2 = cli({"nonsense"});
    CHECK(r2.code == 2);
    CliResult r3 = cli({"cumulants", "--m", "5", "--n", "2"});  // m > n
    CHECK(r3.code == 2);
}

TEST_CASE("mc subcommand reports k-statistics within tolerance of exact") {
    CliResult r = cli({"mc", "--m", "2", "--n", "2", "--samples", "200000", "--seed",
                       "42", "--threads", "2"});
    REQUIRE(r.code == 0);
    json doc = parsed(r);
    REQUIRE(doc["k_statistics"].size() == 4);
    for (const auto& row : doc["k_statistics"]) {
        double pull = row["delta_over_se"].get<double>();
        CHECK(std::abs(pull) < 5.0);
    }
    CHECK(doc["config"]["seed"] == 42);
}

TEST_CASE("mc output is byte-identical across runs modulo the timestamp") {
    auto strip = [](json doc) {
        doc.erase("timestamp");
        return doc.dump();
    };
    CliResult a = cli({"mc", "--m", "2", "--n", "3", "--samples", "50000", "--seed",
                       "7", "--threads", "1"});
    CliResult b = cli({"mc", "--m", "2", "--n", "3", "--samples", "50000", "--seed",
                       "7", "--threads", "1"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(strip(parsed(a)) == strip(parsed(b)));
    // thread count does not change the estimates either (stream partitioning)
    CliResult c = cli({"mc", "--m", "2", "--n", "3", "--samples", "50000", "--seed",
                       "7", "--threads", "3"});
    json dc = parsed(c);
    json da = parsed(a);
    CHECK(da["k_statistics"].dump() == dc["k_statistics"].dump());
}

TEST_CASE("density subcommand emits plot CSV over the requested grid") {
    CliResult r = cli({"density", "--m", "2", "--n", "2", "--samples", "20000",
                       "--grid", "-4:2:0.5", "--order", "k4", "--seed", "1",
                       "--threads", "2"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "x,empirical,gaussian,k3,k4");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 12);  // (-4..2)/0.5
    // gaussian-only order trims the columns
    CliResult g = cli({"density", "--m", "2", "--n", "2", "--samples", "1000",
                       "--grid", "-4:2:0.5", "--order", "gaussian", "--seed", "1"});
    CHECK(g.out.rfind("x,empirical,gaussian\n", 0) == 0);
}

TEST_CASE("verify identities exit code reflects the catalog state") {
    CliResult r = cli({"verify", "identities", "--suite", "B", "--tol", "1e-9"});
    REQUIRE(r.code == 0);
    json doc = parsed(r);
    CHECK(doc["pass"] == true);
    CHECK(doc["reports"].size() == 25);
    // an impossible tolerance forces exit 1
    CliResult tight = cli({"verify", "identities", "--suite", "B", "--tol", "1e-18"});
    CHECK(tight.code == 1);
    CHECK(parsed(tight)["pass"] == false);
}

TEST_CASE("verify identities round-trips the catalog through --dump/--catalog") {
    std::string path = "/tmp/qent_catalog_test.json";
    CliResult dump = cli({"verify", "identities", "--suite", "A", "--dump", path});
    REQUIRE(dump.code == 0);
    CliResult reload = cli({"verify", "identities", "--catalog", path});
    CHECK(reload.code == 0);
    json doc = parsed(reload);
    CHECK(doc["config"]["catalog"] == path);
    CHECK(doc["reports"].size() == 103);
    CHECK(doc["pass"] == true);
}

TEST_CASE("verify integrals agrees across the two kappa4T paths") {
    CliResult r = cli({"verify", "integrals", "--m", "3", "--n", "5"});
    REQUIRE(r.code == 0);
    json doc = parsed(r);
    CHECK(doc["pass"] == true);
    CHECK(doc["rel_error"].get<double>() <= 1e-6);
    CHECK(doc["integrals"].contains("IA"));
}

TEST_CASE("verify oracle matches table values for m = 2") {
    CliResult r = cli({"verify", "oracle", "--n", "3"});
    REQUIRE(r.code == 0);
    json doc = parsed(r);
    CHECK(doc["pass"] == true);
    REQUIRE(doc["cumulants"].size() == 4);
}

TEST_CASE("kurtosis-scan emits the decaying diagonal") {
    CliResult r = cli({"kurtosis-scan", "--sizes", "5,10,20,40,80"});
    REQUIRE(r.code == 0);
    json doc = parsed(r);
    REQUIRE(doc["scan"].size() == 5);
    double prev = std::abs(doc["scan"][0]["kurtosis"].get<double>());
    for (std::size_t i = 1; i < doc["scan"].size(); ++i) {
        double cur = std::abs(doc["scan"][i]["kurtosis"].get<double>());
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("help exits zero") {
    CliResult r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("cumulants") != std::string::npos);
}
