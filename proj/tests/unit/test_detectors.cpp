#include "helpers.hpp"

#include "pwftap/errors.hpp"
#include "pwftap/detectors.hpp"
#include "pwftap/measures.hpp"
#include "pwftap/partition.hpp"
#include "pwftap/random_market.hpp"

#include <doctest.h>

using namespace pwftap;
using namespace pwftap::testing;

TEST_CASE("detect_one_point") {
    SUBCASE("flat up-state") {
        MarketModel m = market_m2();
        ArbitrageFinding f = detect_one_point(m, {}, natural_ptr(m));
        REQUIRE(f.found);
        CHECK(sgn(f.strategy->H[0][0][0]) < 0);
        CHECK(f.witness_set == set_of(m, {"d"}));
    }
    SUBCASE("fair coin") {
        MarketModel m = market_m1();
        ArbitrageFinding f = detect_one_point(m, {}, natural_ptr(m));
        CHECK_FALSE(f.found);
        CHECK(f.certificate.status == LpStatus::optimal);
    }
    SUBCASE("overpriced call") {
        MarketModel m = market_m4(q(3, 5));
        ArbitrageFinding f = detect_one_point(m, {0}, natural_ptr(m));
        REQUIRE(f.found);
        CHECK(sgn(f.strategy->alpha[0][0]) < 0);
    }
}

TEST_CASE("detect_strong and detect_uniformly_strong") {
    SUBCASE("both states below") {
        MarketModel m = market_m3();
        using Detector = ArbitrageFinding (*)(const MarketModel&, const OptionSelection&, FiltrationPtr);
        for (Detector detect : {Detector(&detect_strong), Detector(&detect_uniformly_strong)}) {
            ArbitrageFinding f = detect(m, OptionSelection{}, natural_ptr(m));
            REQUIRE(f.found);
            CHECK(f.strategy->H[0][0] == std::vector<Rational>{q(-1)});
            CHECK(f.epsilon == 1);
            CHECK(f.payoff == Payoff{q(2), q(1)});
        }
    }
    SUBCASE("flat up-state in the aggregating filtration") {
        MarketModel m = market_m2();
        SchemeResult r = run_partition_scheme(m, {});
        CHECK_FALSE(detect_strong(m, {}, r.filtration).found);
    }
    SUBCASE("overpriced call in the aggregating filtration") {
        MarketModel m = market_m4(q(3, 5));
        SchemeResult r = run_partition_scheme(m, {0});
        ArbitrageFinding f = detect_strong(m, {0}, r.filtration);
        CHECK(f.found);
        CHECK(sgn(f.epsilon) > 0);
    }
    SUBCASE("fair coin") {
        MarketModel m = market_m1();
        ArbitrageFinding f = detect_uniformly_strong(m, {}, natural_ptr(m));
        CHECK_FALSE(f.found);
        CHECK(f.epsilon == 0);
    }
    SUBCASE("grid with barrier 4") {
        MarketModel grid = knock_in_grid(q(4));
        SchemeResult r = run_partition_scheme(grid, grid.all_options());
        ArbitrageFinding f = detect_uniformly_strong(grid, grid.all_options(), r.filtration);
        CHECK(f.found);
        CHECK(sgn(f.epsilon) > 0);
        CHECK(f.note.find("cannot be told apart") != std::string::npos);
    }
}

TEST_CASE("detect_class_S") {
    SUBCASE("polar singleton") {
        MarketModel m = market_m2();
        ArbitrageFinding f = detect_class_S(m, {}, natural_ptr(m), {set_of(m, {"d"})});
        CHECK(f.found);
        CHECK(f.target == set_of(m, {"d"}));
    }
    SUBCASE("charged singleton") {
        MarketModel m = market_m1();
        CHECK_FALSE(detect_class_S(m, {}, natural_ptr(m), {set_of(m, {"u"})}).found);
    }
    SUBCASE("no measure at all") {
        MarketModel m = market_m3();
        for (const auto& a : {set_of(m, {"u"}), set_of(m, {"d"}), m.all_scenarios()}) {
            CHECK(detect_class_S(m, {}, natural_ptr(m), {a}).found);
        }
    }
    SUBCASE("empty member") {
        MarketModel m = market_m1();
        CHECK_THROWS_AS(detect_class_S(m, {}, natural_ptr(m), {ScenarioSet(2)}), PreconditionError);
    }
}

TEST_CASE("conditional_support") {
    MarketModel m1 = market_m1();
    auto c1 = conditional_support(m1, FiniteMeasure({q(1, 2), q(1, 2)}), 1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].points == std::vector<Point>{{q(-1)}, {q(1)}});
    MarketModel m2 = market_m2();
    auto c2 = conditional_support(m2, FiniteMeasure({q(1, 2), q(1, 2)}), 1);
    CHECK(c2[0].points == std::vector<Point>{{q(-2)}, {q(0)}});
    auto c3 = conditional_support(m2, FiniteMeasure::dirac(2, 0), 1);
    CHECK(c3[0].points == std::vector<Point>{{q(0)}});
    CHECK_FALSE(c3[0].unconstrained);
}

TEST_CASE("dmw_analysis") {
    auto all_three = [](const DmwReport& r) {
        return std::vector<bool>{r.no_classical_arbitrage, r.full_mass_on_efficient, r.equivalent_measure_exists};
    };
    MarketModel m1 = market_m1();
    DmwReport r1 = dmw_analysis(m1, FiniteMeasure({q(1, 2), q(1, 2)}));
    CHECK(r1.agree);
    CHECK(all_three(r1) == std::vector<bool>{true, true, true});
    CHECK(r1.equivalent_measure == FiniteMeasure({q(1, 2), q(1, 2)}));

    MarketModel m2 = market_m2();
    DmwReport r2 = dmw_analysis(m2, FiniteMeasure({q(1, 2), q(1, 2)}));
    CHECK(r2.agree);
    CHECK(all_three(r2) == std::vector<bool>{false, false, false});
    CHECK(r2.agree_dominated);

    DmwReport r3 = dmw_analysis(m2, FiniteMeasure::dirac(2, 0));
    CHECK(r3.agree);
    CHECK(all_three(r3) == std::vector<bool>{true, true, true});
    CHECK(r3.equivalent_measure == FiniteMeasure::dirac(2, 0));
}

TEST_CASE("detector equivalences on random markets") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        MarketModel m = random_market(seed);
        CAPTURE(seed);
        const OptionSelection all = m.all_options();
        const ScenarioSet oracle = efficient_set_oracle(m, all);
        auto natural = natural_ptr(m);
        CHECK(detect_one_point(m, all, natural).found == !(oracle == m.omega()));

        SchemeResult r = run_partition_scheme(m, all);
        ArbitrageFinding strong = detect_strong(m, all, r.filtration);
        CHECK(strong.found == oracle.empty());
        CHECK(detect_uniformly_strong(m, all, r.filtration).found == strong.found);

        if (!oracle.empty()) {
            for (ScenarioIndex w : m.omega().members()) {
                ScenarioSet single(m.num_scenarios(), {w});
                CHECK(detect_class_S(m, all, natural, {single}).found == !oracle.contains(w));
            }
        }
    }
}
