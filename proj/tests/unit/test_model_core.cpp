#include "helpers.hpp"

#include "pwftap/errors.hpp"
#include "pwftap/market_io.hpp"
#include "pwftap/random_market.hpp"
#include "pwftap/strategy.hpp"

#include <doctest.h>

using namespace pwftap;
using namespace pwftap::testing;

namespace {

const char* kM1 = R"({
  "T": 1, "d": 1,
  "scenarios": [
    {"id": "u", "S": [[2], [3]]},
    {"id": "d", "S": [[2], [1]]}
  ]
})";

}  // namespace

TEST_CASE("load_market reads the two-scenario market") {
    MarketModel m = load_market(kM1);
    CHECK(m.horizon() == 1);
    CHECK(m.num_assets() == 1);
    CHECK(m.num_scenarios() == 2);
    CHECK(m.omega() == ScenarioSet::full(2));
    CHECK(m.price(1, 1)[0] == 1);
}

TEST_CASE("load_market rejects an empty omega") {
    std::string text = R"({"T": 1, "d": 1, "omega": [],
        "scenarios": [{"id": "u", "S": [[2], [3]]}, {"id": "d", "S": [[2], [1]]}]})";
    CHECK_THROWS_AS(load_market(text), ValidationError);
    try {
        load_market(text);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("empty") != std::string::npos);
    }
}

TEST_CASE("load_market validation and parse errors") {
    SUBCASE("non-constant initial factor") {
        std::string text = R"({"T": 1, "d": 1, "d_factors": 1, "scenarios": [
            {"id": "u", "S": [[2], [3]], "Y": [[0], [1]]},
            {"id": "d", "S": [[2], [1]], "Y": [[1], [1]]}]})";
        CHECK_THROWS_AS(load_market(text), ValidationError);
    }
    SUBCASE("unknown field") {
        try {
            load_market(R"({"T": 1, "d": 1, "scenarios": [], "extra": 1})");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.location() == "$.extra");
        }
    }
    SUBCASE("floating point literal") {
        CHECK_THROWS_AS(load_market(R"({"T": 1, "d": 1, "scenarios": [{"id": "u", "S": [[2.5], [3]]}]})"),
                        ParseError);
    }
    SUBCASE("syntax error carries line and column") {
        try {
            load_market("{\n  \"T\": 1,\n  \"d\": ,\n}");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.location().rfind("line 3", 0) == 0);
        }
    }
    SUBCASE("option payoff missing a scenario") {
        std::string text = R"({"T": 1, "d": 1, "scenarios": [
            {"id": "u", "S": [[2], [3]]}, {"id": "d", "S": [[2], [1]]}],
            "options": [{"name": "c", "payoff": {"u": "1/2"}}]})";
        CHECK_THROWS_AS(load_market(text), ValidationError);
    }
    SUBCASE("rationals as strings") {
        std::string text = R"({"T": 1, "d": 1, "scenarios": [
            {"id": "u", "S": [["4/2"], ["7/3"]]}, {"id": "d", "S": [[2], ["-1/3"]]}]})";
        MarketModel m = load_market(text);
        CHECK(m.price(0, 1)[0] == q(7, 3));
        CHECK(m.increment(1, 1)[0] == q(-7, 3));
    }
}

TEST_CASE("the knock-in grid has 289 scenarios and two options") {
    MarketModel grid = knock_in_grid(q(3, 2));
    CHECK(grid.num_scenarios() == 289);
    CHECK(grid.num_options() == 2);
    // Independent count of grid points: 17 values per coordinate.
    CHECK(level_set_partition(grid, 1).size() == 17);
    CHECK(level_set_partition(grid, 2).size() == 289);
}

TEST_CASE("serialize_market round-trips") {
    MarketModel grid = knock_in_grid(q(3, 2));
    CHECK(load_market(serialize_market(grid)).data() == grid.data());
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        MarketModel m = random_market(seed);
        CHECK(load_market(serialize_market(m)).data() == m.data());
    }
}

TEST_CASE("level sets of the two-scenario market") {
    MarketModel m = market_m1();
    CHECK(level_set_partition(m, 0) == Atoms{{0, 1}});
    CHECK(level_set_partition(m, 1) == Atoms{{0}, {1}});
}

TEST_CASE("identical paths share an atom") {
    MarketData data = market_m1().data();
    data.scenarios.push_back(ScenarioPath{"u2", data.scenarios[0].prices, data.scenarios[0].factors});
    MarketModel m = MarketModel::create(data);
    CHECK(level_set_partition(m, 1) == Atoms{{0, 2}, {1}});
}

TEST_CASE("natural filtrations refine over time on random markets") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        MarketModel m = random_market(seed);
        FiltrationPartition f = natural_filtration(m);
        for (std::size_t t = 1; t <= m.horizon(); ++t) {
            for (const auto& atom : f.atoms(t)) {
                for (ScenarioIndex w : atom) CHECK(f.atom_of(w, t - 1) == f.atom_of(atom.front(), t - 1));
            }
        }
    }
}

TEST_CASE("refine_partition") {
    MarketModel m = market_m2();
    FiltrationPartition base = natural_filtration(m);
    SUBCASE("no marks leaves the base unchanged") { CHECK(refine_partition(base, {}) == base); }
    SUBCASE("a set mark splits from its start time") {
        FiltrationPartition f = refine_partition(base, {Mark::from_set(set_of(m, {"d"}), 0)});
        CHECK(f.atoms(0) == Atoms{{0}, {1}});
        CHECK(f.refines(base));
        CHECK_FALSE(base.refines(f));
    }
    SUBCASE("a constant mark changes nothing") {
        FiltrationPartition f = refine_partition(base, {Mark::from_values({q(-1), q(-1)}, 0)});
        CHECK(f == base);
    }
    SUBCASE("marks must cover every scenario") {
        CHECK_THROWS_AS(refine_partition(base, {Mark::from_values({q(1)}, 0)}), PreconditionError);
    }
}

TEST_CASE("strategy payoffs") {
    MarketModel m1 = market_m1();
    auto f = natural_ptr(m1);
    SUBCASE("unit holding") {
        Strategy s = Strategy::zero(m1, 0, f);
        s.set_holding_on_atom(1, 0, {q(1)});
        CHECK(strategy_payoff_vector(m1, {}, s) == Payoff{q(1), q(-1)});
    }
    SUBCASE("zero strategy") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            MarketModel m = random_market(seed);
            Strategy s = Strategy::zero(m, m.num_options(), natural_ptr(m));
            for (const auto& v : strategy_payoff_vector(m, m.option_payoffs(m.all_options()), s)) CHECK(v == 0);
        }
    }
    SUBCASE("long call at cost 3/5") {
        MarketModel m4 = market_m4(q(3, 5));
        Strategy s = Strategy::zero(m4, 1, natural_ptr(m4));
        s.set_alpha_everywhere({q(1)});
        // Independent evaluation: (3 - 2)^+ - 3/5 and (1 - 2)^+ - 3/5.
        CHECK(strategy_payoff_vector(m4, m4.option_payoffs({0}), s) == Payoff{q(2, 5), q(-3, 5)});
    }
}

TEST_CASE("payoffs are linear in the strategy") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        MarketModel m = random_market(seed);
        auto f = natural_ptr(m);
        auto phi = m.option_payoffs(m.all_options());
        SeededDraws draws(seed * 7919);
        auto random_strategy = [&] {
            Strategy s = Strategy::zero(m, m.num_options(), f);
            std::vector<Rational> alpha;
            for (std::size_t j = 0; j < m.num_options(); ++j) alpha.push_back(draws.rational(3, 3));
            s.set_alpha_everywhere(alpha);
            for (std::size_t t = 1; t <= m.horizon(); ++t) {
                for (std::size_t a = 0; a < f->atoms(t - 1).size(); ++a) {
                    std::vector<Rational> h;
                    for (std::size_t j = 0; j < m.num_assets(); ++j) h.push_back(draws.rational(3, 3));
                    s.set_holding_on_atom(t, a, h);
                }
            }
            return s;
        };
        Strategy s1 = random_strategy();
        Strategy s2 = random_strategy();
        Rational a = draws.rational(4, 3);
        Rational b = draws.rational(4, 3);
        Payoff p1 = strategy_payoff_vector(m, phi, s1);
        Payoff p2 = strategy_payoff_vector(m, phi, s2);
        Payoff mixed = strategy_payoff_vector(m, phi, s1.combine(a, s2, b));
        for (std::size_t w = 0; w < m.num_scenarios(); ++w) CHECK(mixed[w] == a * p1[w] + b * p2[w]);
        CHECK(is_predictable(m, s1, *f));
    }
}

TEST_CASE("predictability") {
    MarketModel m1 = market_m1();
    auto f = natural_ptr(m1);
    Strategy s = Strategy::zero(m1, 0, f);
    s.set_holding_on_atom(1, 0, {q(2)});
    CHECK(is_predictable(m1, s, *f));
    s.H[0][0] = {q(1)};  // depends on S_1
    CHECK_FALSE(is_predictable(m1, s, *f));
}
