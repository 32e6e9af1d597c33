#include "fixtures.hpp"

#include "pwftap/market_io.hpp"
#include "pwftap_cli/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace pwftap;
using namespace pwftap::testing;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / ("pwftap_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string market_file(const std::string& name, const MarketModel& m) {
    return write_file(name + ".json", serialize_market(m));
}

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

Json report(const std::string& path) {
    std::ifstream in(path);
    return Json::parse(in);
}

std::string slurp(const std::string& path) { return read_text_file(path); }

}  // namespace

TEST_CASE("ftap on M1 reports no arbitrage with the full efficient set") {
    const std::string m1 = market_file("m1", market_m1());
    const std::string out = (scratch_dir() / "m1_ftap.json").string();
    Run r = invoke({"ftap", "--market", m1, "--out", out});
    REQUIRE(r.status == 0);
    const Json doc = report(out);
    CHECK(doc["command"] == "ftap");
    CHECK(doc["exit_status"] == 0);
    CHECK(doc["result"]["verdict"] == "no arbitrage");
    CHECK(doc["result"]["efficient_set"] == Json::array({"u", "d"}));
    CHECK(doc["result"]["equivalence_holds"] == true);
    CHECK(r.out.find("no arbitrage") != std::string::npos);
}

TEST_CASE("ftap on M3 reports arbitrage with a serialized witness") {
    const std::string m3 = market_file("m3", market_m3());
    const std::string out = (scratch_dir() / "m3_ftap.json").string();
    REQUIRE(invoke({"ftap", "--market", m3, "--out", out}).status == 0);
    const Json doc = report(out);
    CHECK(doc["result"]["verdict"] == "arbitrage");
    CHECK(doc["result"]["efficient_set"].empty());
    const Json& strong = doc["result"]["strong_arbitrage"];
    CHECK(strong["found"] == true);
    CHECK(strong.contains("witness"));
    CHECK(strong["witness"]["H"].size() == 1);
}

TEST_CASE("ftap on the knock-in grid reports no arbitrage with two scheme steps") {
    const std::string grid = market_file("grid", knock_in_grid(Rational(3, 2)));
    const std::string out = (scratch_dir() / "grid_ftap.json").string();
    REQUIRE(invoke({"ftap", "--market", grid, "--out", out}).status == 0);
    const Json doc = report(out);
    CHECK(doc["market"]["scenarios"] == 289);
    CHECK(doc["result"]["verdict"] == "no arbitrage");
    CHECK(doc["result"]["scheme"]["beta"] == 2);
    CHECK(doc["result"]["scheme"]["success"] == true);
}

TEST_CASE("price of the M1 call is one half on both sides") {
    const std::string m1 = market_file("m1", market_m1());
    const std::string out = (scratch_dir() / "m1_price.json").string();
    Run r = invoke({"price", "--market", m1, "--payoff", "max(S[1][1]-2,0)", "--out", out});
    REQUIRE(r.status == 0);
    const Json doc = report(out);
    CHECK(doc["result"]["price"] == "1/2");
    CHECK(doc["result"]["dual"] == "1/2");
    CHECK(doc["result"]["gap_zero_on_efficient_set"] == true);
    CHECK(doc["result"].contains("strategy"));
}

TEST_CASE("price on M3 is minus infinity on the efficient set") {
    const std::string m3 = market_file("m3", market_m3());
    const std::string out = (scratch_dir() / "m3_price.json").string();
    REQUIRE(invoke({"price", "--market", m3, "--payoff", "S[1][1]", "--out", out}).status == 0);
    const Json doc = report(out);
    CHECK(doc["result"]["price"] == "-inf");
    CHECK(doc["result"]["dual"] == "-inf");
    CHECK_FALSE(doc["result"].contains("strategy"));
}

TEST_CASE("price accepts a payoff file") {
    const std::string m1 = market_file("m1", market_m1());
    const std::string g = write_file("m1_payoff.json", R"({"payoff": {"u": 1, "d": 0}})");
    const std::string out = (scratch_dir() / "m1_price_file.json").string();
    REQUIRE(invoke({"price", "--market", m1, "--payoff", g, "--out", out}).status == 0);
    CHECK(report(out)["result"]["price"] == "1/2");
}

TEST_CASE("price on the b=4 grid surfaces the efficient and omega values") {
    const std::string grid = market_file("grid4", knock_in_grid(Rational(4)));
    const std::string out = (scratch_dir() / "grid4_price.json").string();
    REQUIRE(invoke({"price", "--market", grid, "--payoff", "1", "--hedge-set", "omega", "--out", out}).status == 0);
    const Json doc = report(out);
    CHECK(doc["result"]["hedge_set"] == "omega");
    CHECK(doc["result"]["efficient_set"].empty());
    CHECK(doc["result"]["primal_on_efficient_set"] == "-inf");
    CHECK(doc["result"]["dual"] == "-inf");
}

TEST_CASE("partition reports the ladder for M4 with a cheap call") {
    const std::string m4 = market_file("m4", market_m4(Rational(1, 4)));
    const std::string out = (scratch_dir() / "m4_partition.json").string();
    REQUIRE(invoke({"partition", "--market", m4, "--out", out}).status == 0);
    const Json doc = report(out);
    CHECK(doc["command"] == "partition");
    CHECK(doc["result"].contains("beta"));
    CHECK(doc["result"]["A"].size() == doc["result"]["A_star"].size());
}

TEST_CASE("dmw examples") {
    const std::string m1 = market_file("m1", market_m1());
    const std::string m2 = market_file("m2", market_m2());
    const std::string uniform = write_file("uniform.json", R"({"weights": {"u": "1/2", "d": "1/2"}})");
    const std::string dirac_u = write_file("dirac_u.json", R"({"weights": {"u": 1}})");

    auto flags = [](const Json& r) {
        return std::vector<bool>{r["no_classical_arbitrage"], r["full_mass_on_efficient"],
                                 r["equivalent_measure_exists"]};
    };
    const std::string out = (scratch_dir() / "dmw.json").string();

    REQUIRE(invoke({"dmw", "--market", m1, "--measure", uniform, "--out", out}).status == 0);
    Json r = report(out)["result"];
    CHECK(r["agree"] == true);
    CHECK(flags(r) == std::vector<bool>{true, true, true});

    REQUIRE(invoke({"dmw", "--market", m2, "--measure", uniform, "--out", out}).status == 0);
    r = report(out)["result"];
    CHECK(r["agree"] == true);
    CHECK(flags(r) == std::vector<bool>{false, false, false});

    REQUIRE(invoke({"dmw", "--market", m2, "--measure", dirac_u, "--out", out}).status == 0);
    r = report(out)["result"];
    CHECK(r["agree"] == true);
    CHECK(flags(r) == std::vector<bool>{true, true, true});
}

TEST_CASE("input errors exit with status 2") {
    const std::string m1 = market_file("m1", market_m1());
    const std::string bad_weights = write_file("bad_weights.json", R"({"weights": {"u": "1/2"}})");
    const std::string empty_omega = write_file(
        "empty_omega.json",
        R"({"T": 1, "d": 1, "d_factors": 0, "omega": [], "options": [],
            "scenarios": [{"id": "u", "S": [[2], [3]], "Y": [[], []]}]})");

    CHECK(invoke({"ftap", "--market", (scratch_dir() / "missing.json").string()}).status == 2);
    CHECK(invoke({"ftap", "--market", empty_omega}).status == 2);
    CHECK(invoke({"price", "--market", m1, "--payoff", "max(S[1][1]-,0)"}).status == 2);
    CHECK(invoke({"price", "--market", m1, "--payoff", "1", "--hedge-set", "neither"}).status == 2);
    CHECK(invoke({"dmw", "--market", m1, "--measure", bad_weights}).status == 2);
    CHECK(invoke({"ftap", "--market", m1, "--options", "nope"}).status == 2);
    CHECK(invoke({"frobnicate"}).status == 2);
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("check passes on fixtures and generated markets") {
    const std::string m1 = market_file("m1", market_m1());
    const std::string out = (scratch_dir() / "check.json").string();
    Run r = invoke({"check", "--market", m1, "--out", out});
    CHECK(r.status == 0);
    CHECK(report(out)["result"]["all_hold"] == true);
    for (const char* seed : {"1", "2", "3", "17", "99"}) {
        CAPTURE(seed);
        CHECK(invoke({"check", "--seed", seed}).status == 0);
    }
}

TEST_CASE("reports are byte-identical across runs and market files round-trip") {
    const std::string grid = market_file("grid", knock_in_grid(Rational(3, 2)));
    const std::string a = (scratch_dir() / "det_a.json").string();
    const std::string b = (scratch_dir() / "det_b.json").string();
    REQUIRE(invoke({"partition", "--market", grid, "--out", a}).status == 0);
    REQUIRE(invoke({"partition", "--market", grid, "--out", b}).status == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(serialize_market(load_market_file(grid)) == slurp(grid));
}
