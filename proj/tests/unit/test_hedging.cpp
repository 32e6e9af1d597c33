#include "helpers.hpp"

#include "pwftap/errors.hpp"
#include "pwftap/hedging.hpp"
#include "pwftap/measures.hpp"
#include "pwftap/random_market.hpp"

#include <doctest.h>

using namespace pwftap;
using namespace pwftap::testing;

namespace {

Payoff terminal_price(const MarketModel& m) {
    Payoff g;
    for (ScenarioIndex w = 0; w < m.num_scenarios(); ++w) g.push_back(m.price(w, m.horizon())[0]);
    return g;
}

}  // namespace

TEST_CASE("superhedge") {
    SUBCASE("call in the fair coin market is replicated") {
        MarketModel m = market_m1();
        SuperhedgeResult r = superhedge(m, m.all_scenarios(), std::vector<Payoff>{}, Payoff{q(1), q(0)});
        CHECK(r.value == ExtendedRational::finite(q(1, 2)));
        REQUIRE(r.strategy);
        CHECK(r.strategy->H[0][0] == std::vector<Rational>{q(1, 2)});
    }
    SUBCASE("empty hedge set") {
        MarketModel m = market_m1();
        SuperhedgeResult r = superhedge(m, ScenarioSet(2), std::vector<Payoff>{}, Payoff{q(1), q(0)});
        CHECK(r.value.is_minus_infinity());
        CHECK_FALSE(r.strategy);
    }
    SUBCASE("grid without an efficient set") {
        MarketModel grid = knock_in_grid(q(4));
        const Payoff one(grid.num_scenarios(), q(1));
        SuperhedgeResult on_omega = superhedge(grid, grid.omega(), grid.all_options(), one);
        CHECK(on_omega.value.is_finite());
        if (on_omega.value.is_finite()) CHECK(sgn(on_omega.value.value()) >= 0);
        SuperhedgeResult on_eff =
            superhedge(grid, efficient_set_oracle(grid, grid.all_options()), grid.all_options(), one);
        CHECK(on_eff.value.is_minus_infinity());
    }
}

TEST_CASE("dual_value") {
    MarketModel m1 = market_m1();
    CHECK(dual_value(m1, {}, Payoff{q(1), q(0)}).value == ExtendedRational::finite(q(1, 2)));
    CHECK(dual_value(market_m3(), {}, Payoff{q(5), q(-2)}).value.is_minus_infinity());
    MarketModel fair = market_m4(q(1, 2));
    CHECK(dual_value(fair, {0}, terminal_price(fair)).value == ExtendedRational::finite(q(2)));
}

TEST_CASE("duality_report") {
    SUBCASE("complete market") {
        MarketModel m = market_m1();
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            DualityReport r = duality_report(m, {}, random_payoff(seed, 2));
            CHECK(r.gap_zero);
            CHECK_FALSE(r.gap_on_omega);
        }
    }
    SUBCASE("indicator of the polar state") {
        MarketModel m = market_m2();
        DualityReport r = duality_report(m, {}, Payoff{q(0), q(1)});
        CHECK(r.efficient_set == set_of(m, {"u"}));
        CHECK(r.primal.value == ExtendedRational::finite(q(0)));
        CHECK(r.dual.value == ExtendedRational::finite(q(0)));
        CHECK(r.gap_zero);
        CHECK(r.primal_on_omega.value == ExtendedRational::finite(q(0)));
    }
    SUBCASE("grid without an efficient set") {
        MarketModel grid = knock_in_grid(q(4));
        DualityReport r = duality_report(grid, grid.all_options(), Payoff(grid.num_scenarios(), q(1)));
        CHECK(r.dual.value.is_minus_infinity());
        CHECK(r.primal.value.is_minus_infinity());
        CHECK(r.gap_zero);
        CHECK(r.primal_on_omega.value.is_finite());
        CHECK(r.gap_on_omega);
        CHECK(r.summary.find("gap on Omega") != std::string::npos);
    }
}

TEST_CASE("variational identity") {
    SUBCASE("fair call, terminal price") {
        MarketModel m = market_m4(q(1, 2));
        VariationalIdentity v = variational_identity_check(m, {0}, terminal_price(m), 0);
        CHECK(v.lhs == ExtendedRational::finite(q(2)));
        CHECK(v.rhs == ExtendedRational::finite(q(2)));
        CHECK(v.equal);
    }
    SUBCASE("replicable extra option") {
        MarketData data = market_m4(q(1, 2)).data();
        data.options.push_back(Option{"forward", {q(1), q(-1)}});
        MarketModel m = MarketModel::create(data);
        const Payoff g{q(3), q(-1)};
        VariationalIdentity v = variational_identity_check(m, {0, 1}, g, 1);
        CHECK(v.equal);
        SuperhedgeResult base = superhedge(m, efficient_set_oracle(m, {0, 1}), m.option_payoffs({0}), g);
        CHECK(v.lhs == base.value);
    }
    SUBCASE("no options") {
        CHECK_THROWS_AS(variational_identity_check(market_m1(), {}, Payoff{q(1), q(0)}, 0), PreconditionError);
    }
}

TEST_CASE("hedging properties on random markets") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        MarketModel m = random_market(seed);
        CAPTURE(seed);
        const OptionSelection all = m.all_options();
        const auto phi = m.option_payoffs(all);
        const Payoff g1 = random_payoff(seed, m.num_scenarios());
        const Payoff g2 = random_payoff(seed + 100000, m.num_scenarios());
        const ScenarioSet eff = efficient_set_oracle(m, all);

        DualityReport r = duality_report(m, all, g1);
        CHECK(r.gap_zero);
        CHECK(r.primal.value.is_minus_infinity() == eff.empty());
        if (r.primal.strategy) {
            Payoff p = strategy_payoff_vector(m, phi, *r.primal.strategy);
            for (ScenarioIndex w : eff.members()) CHECK(r.primal.value.value() + p[w] >= g1[w]);
        }
        // Weak duality and monotonicity.
        auto on_omega = superhedge(m, m.omega(), phi, g1).value;
        CHECK(r.dual.value <= on_omega);
        CHECK(r.primal.value <= on_omega);
        // Sublinearity and positive homogeneity.
        Payoff sum(g1.size());
        Payoff scaled(g1.size());
        for (std::size_t w = 0; w < g1.size(); ++w) {
            sum[w] = g1[w] + g2[w];
            scaled[w] = q(3, 2) * g1[w];
        }
        auto p1 = superhedge(m, m.omega(), phi, g1).value;
        auto p2 = superhedge(m, m.omega(), phi, g2).value;
        auto ps = superhedge(m, m.omega(), phi, sum).value;
        if (p1.is_finite() && p2.is_finite()) {
            REQUIRE(ps.is_finite());
            CHECK(ps.value() <= p1.value() + p2.value());
            CHECK(superhedge(m, m.omega(), phi, scaled).value == ExtendedRational::finite(q(3, 2) * p1.value()));
        }
        if (m.num_options() >= 1) {
            for (std::size_t n = 0; n < m.num_options(); ++n) CHECK(variational_identity_check(m, all, g1, n).equal);
        }
    }
}
