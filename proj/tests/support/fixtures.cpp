#include "fixtures.hpp"

#include <stdexcept>

namespace pwftap::testing {

namespace {

MarketModel one_period(int s0, int up, int down) {
    MarketData data;
    data.horizon = 1;
    data.num_assets = 1;
    data.scenarios = {
        ScenarioPath{"u", {{Rational(s0)}, {Rational(up)}}, {{}, {}}},
        ScenarioPath{"d", {{Rational(s0)}, {Rational(down)}}, {{}, {}}},
    };
    return MarketModel::create(std::move(data));
}

}  // namespace

MarketModel market_m1() { return one_period(2, 3, 1); }
MarketModel market_m2() { return one_period(3, 3, 1); }
MarketModel market_m3() { return one_period(3, 1, 2); }

MarketModel market_m4(const Rational& cost) {
    MarketData data = market_m1().data();
    data.options.push_back(Option{"call", {Rational(1) - cost, Rational(0) - cost}});
    return MarketModel::create(std::move(data));
}

std::string grid_id(int x1, int x2) { return "g" + std::to_string(x1) + "_" + std::to_string(x2); }

MarketModel knock_in_grid(const Rational& barrier) {
    const Rational c(1, 4);
    const Rational strikes[2] = {Rational(2), Rational(1)};
    MarketData data;
    data.horizon = 2;
    data.num_assets = 1;
    data.options = {Option{"knock_in_K1", {}}, Option{"knock_in_K2", {}}};
    for (int i = 0; i <= 16; ++i) {
        for (int j = 0; j <= 16; ++j) {
            const Rational x1(i, 4);
            const Rational x2(j, 4);
            data.scenarios.push_back(ScenarioPath{grid_id(i, j), {{Rational(2)}, {x1}, {x2}}, {{}, {}, {}}});
            for (int o = 0; o < 2; ++o) {
                Rational g;
                if (x1 <= barrier) {
                    Rational v = x2 - strikes[o];
                    g = sgn(v) > 0 ? v : Rational(0);
                } else {
                    g = c;
                }
                data.options[o].payoff.push_back(g - c);
            }
        }
    }
    return MarketModel::create(std::move(data));
}

ScenarioIndex index(const MarketModel& market, const std::string& id) {
    auto w = market.index_of(id);
    if (!w) throw std::out_of_range("no scenario '" + id + "'");
    return *w;
}

}  // namespace pwftap::testing
