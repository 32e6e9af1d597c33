#include "pwftap/random_market.hpp"

#include "pwftap/measures.hpp"

#include <algorithm>
#include <optional>

namespace pwftap {

namespace {

struct Node {
    std::vector<std::vector<Rational>> prices;   // [t][asset]
    std::vector<std::vector<Rational>> factors;  // [t][factor]
};

Rational draw_increment(SeededDraws& draws, int bias) {
    // Increments in {-3..3}/den, optionally pushed to one side.
    Rational r(static_cast<long>(draws.integer(-3, 3)), static_cast<unsigned long>(draws.integer(1, 2)));
    r.canonicalize();
    if (bias > 0 && sgn(r) < 0) r = -r;
    if (bias < 0 && sgn(r) > 0) r = -r;
    return r;
}

}  // namespace

MarketModel random_market(std::uint64_t seed, const RandomMarketLimits& limits) {
    SeededDraws draws(seed);
    MarketData data;
    data.horizon = static_cast<std::size_t>(draws.integer(1, static_cast<std::int64_t>(limits.max_horizon)));
    data.num_assets = static_cast<std::size_t>(draws.integer(1, static_cast<std::int64_t>(limits.max_assets)));
    data.num_factors = draws.coin(4) ? static_cast<std::size_t>(draws.integer(0, static_cast<std::int64_t>(limits.max_factors))) : 0;

    Node root;
    root.prices.push_back({});
    for (std::size_t j = 0; j < data.num_assets; ++j) root.prices[0].push_back(Rational(static_cast<long>(draws.integer(2, 6))));
    root.factors.push_back(std::vector<Rational>(data.num_factors, Rational(0)));

    std::vector<Node> level{root};
    for (std::size_t t = 1; t <= data.horizon; ++t) {
        std::vector<Node> next;
        for (std::size_t i = 0; i < level.size(); ++i) {
            const std::size_t still_to_place = level.size() - i - 1;
            const std::size_t room = limits.max_scenarios - next.size() - still_to_place;
            const std::size_t wanted = static_cast<std::size_t>(draws.integer(1, 3)) + (data.num_assets > 1 ? 1 : 0);
            const std::size_t branches = std::min<std::size_t>(room, wanted);
            // Occasionally all children move the same way (a dynamic arbitrage at this node).
            // Balanced nodes are recentred so that positive weights average the moves to zero.
            const int bias = draws.coin(8) ? (draws.coin(2) ? 1 : -1) : 0;
            const bool balanced = bias == 0 && !draws.coin(5);
            std::vector<std::vector<Rational>> moves(branches, std::vector<Rational>(data.num_assets));
            for (auto& move : moves) {
                for (auto& x : move) x = draw_increment(draws, bias);
            }
            if (balanced) {
                std::vector<Rational> weights(branches);
                Rational total = 0;
                for (auto& l : weights) {
                    l = Rational(static_cast<long>(draws.integer(1, 3)));
                    total += l;
                }
                for (std::size_t j = 0; j < data.num_assets; ++j) {
                    Rational mean = 0;
                    for (std::size_t b = 0; b < branches; ++b) mean += weights[b] * moves[b][j];
                    mean /= total;
                    for (auto& move : moves) move[j] -= mean;
                }
            }
            for (std::size_t b = 0; b < branches; ++b) {
                Node child = level[i];
                std::vector<Rational> p = child.prices.back();
                for (std::size_t j = 0; j < p.size(); ++j) p[j] += moves[b][j];
                child.prices.push_back(std::move(p));
                std::vector<Rational> y(data.num_factors);
                for (auto& x : y) x = Rational(static_cast<long>(draws.integer(0, 1)));
                child.factors.push_back(std::move(y));
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    // Occasionally duplicate a path under a second id.
    if (level.size() < limits.max_scenarios && draws.coin(5)) {
        level.push_back(level[static_cast<std::size_t>(draws.integer(0, static_cast<std::int64_t>(level.size()) - 1))]);
    }
    for (std::size_t w = 0; w < level.size(); ++w) {
        data.scenarios.push_back(ScenarioPath{"w" + std::to_string(w), std::move(level[w].prices), std::move(level[w].factors)});
    }
    const std::size_t n = data.scenarios.size();

    if (draws.coin(3)) {
        std::vector<std::string> ids;
        for (std::size_t w = 0; w < n; ++w) {
            if (!draws.coin(3)) ids.push_back(data.scenarios[w].id);
        }
        if (ids.empty()) ids.push_back(data.scenarios[0].id);
        data.omega = std::move(ids);
    }

    const std::size_t k = static_cast<std::size_t>(draws.integer(0, static_cast<std::int64_t>(limits.max_options)));
    // One pricing measure per market, so that several options can be calibrated at once.
    std::optional<FiniteMeasure> pricing;
    if (k > 0) {
        const MarketModel dynamic_only = MarketModel::create(data);
        CalibratedMeasureProblem problem(dynamic_only, dynamic_only.omega(), {});
        Payoff objective(n);
        for (auto& v : objective) v = draws.rational(3, 1);
        if (auto q = problem.optimize_expectation(objective, draws.coin(2) ? Sense::maximize : Sense::minimize)) {
            pricing = std::move(q->second);
        }
    }
    for (std::size_t j = 0; j < k; ++j) {
        Payoff g(n);
        if (draws.coin(2)) {
            // Call on a random asset.
            const std::size_t asset = static_cast<std::size_t>(draws.integer(0, static_cast<std::int64_t>(data.num_assets) - 1));
            const Rational strike(static_cast<long>(draws.integer(1, 7)));
            for (std::size_t w = 0; w < n; ++w) {
                Rational v = data.scenarios[w].prices[data.horizon][asset] - strike;
                g[w] = sgn(v) > 0 ? v : Rational(0);
            }
        } else {
            for (auto& v : g) v = draws.rational(3, 2);
        }
        Rational cost = draws.rational(4, 2);
        if (pricing && !draws.coin(4)) cost = pricing->expectation(g);
        Payoff net(n);
        for (std::size_t w = 0; w < n; ++w) net[w] = g[w] - cost;
        data.options.push_back(Option{"phi" + std::to_string(j + 1), std::move(net)});
    }
    return MarketModel::create(std::move(data));
}

Payoff random_payoff(std::uint64_t seed, std::size_t num_scenarios) {
    SeededDraws draws(seed);
    Payoff g(num_scenarios);
    for (auto& v : g) v = draws.rational(5, 4);
    return g;
}

}  // namespace pwftap
