#include "report.hpp"

namespace pwftap::cli {

Json rational_json(const Rational& v) { return to_string(v); }

Json extended_json(const ExtendedRational& v) { return v.to_string(); }

Json vector_json(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Json set_json(const MarketModel& market, const ScenarioSet& set) {
    Json out = Json::array();
    for (ScenarioIndex w : set.members()) out.push_back(market.scenario_id(w));
    return out;
}

Json payoff_json(const MarketModel& market, const Payoff& payoff) {
    Json out = Json::object();
    for (ScenarioIndex w = 0; w < payoff.size(); ++w) out[market.scenario_id(w)] = to_string(payoff[w]);
    return out;
}

Json measure_json(const MarketModel& market, const FiniteMeasure& q) {
    Json out = Json::object();
    for (ScenarioIndex w = 0; w < q.universe_size(); ++w) {
        if (sgn(q.weight(w)) > 0) out[market.scenario_id(w)] = to_string(q.weight(w));
    }
    return out;
}

namespace {

Json atom_json(const MarketModel& market, const std::vector<ScenarioIndex>& atom) {
    Json ids = Json::array();
    for (ScenarioIndex w : atom) ids.push_back(market.scenario_id(w));
    return ids;
}

}  // namespace

Json strategy_json(const MarketModel& market, const Strategy& s) {
    const FiltrationPartition f = s.filtration ? *s.filtration : natural_filtration(market);
    Json alpha = Json::array();
    for (const auto& atom : f.atoms(0)) {
        alpha.push_back(Json{{"atom", atom_json(market, atom)}, {"weights", vector_json(s.alpha[atom.front()])}});
    }
    Json holdings = Json::array();
    for (std::size_t t = 1; t <= market.horizon(); ++t) {
        Json per_atom = Json::array();
        for (const auto& atom : f.atoms(t - 1)) {
            per_atom.push_back(Json{{"atom", atom_json(market, atom)}, {"holding", vector_json(s.H[t - 1][atom.front()])}});
        }
        holdings.push_back(Json{{"t", t}, {"atoms", std::move(per_atom)}});
    }
    return Json{{"filtration", to_string(f.label())}, {"alpha", std::move(alpha)}, {"H", std::move(holdings)}};
}

Json filtration_json(const MarketModel& market, const FiltrationPartition& f) {
    Json levels = Json::array();
    for (std::size_t t = 0; t <= f.horizon(); ++t) {
        Json atoms = Json::array();
        for (const auto& atom : f.atoms(t)) atoms.push_back(atom_json(market, atom));
        levels.push_back(std::move(atoms));
    }
    return Json{{"label", to_string(f.label())}, {"atoms", std::move(levels)}};
}

Json finding_json(const MarketModel& market, const ArbitrageFinding& f) {
    Json out{{"kind", to_string(f.kind)}, {"found", f.found}};
    if (f.kind == ArbitrageKind::strong || f.kind == ArbitrageKind::uniformly_strong) {
        out["epsilon"] = to_string(f.epsilon);
    }
    if (f.found && f.strategy) {
        out["witness"] = strategy_json(market, *f.strategy);
        out["payoff"] = payoff_json(market, f.payoff);
        out["strict_on"] = set_json(market, f.witness_set);
    } else {
        out["certificate_status"] = to_string(f.certificate.status);
    }
    if (!f.note.empty()) out["note"] = f.note;
    return out;
}

Json market_digest(const MarketModel& market, const OptionSelection& selection) {
    Json names = Json::array();
    for (std::size_t j : selection) names.push_back(market.options()[j].name);
    return Json{{"scenarios", market.num_scenarios()},
                {"omega_size", market.omega().size()},
                {"horizon", market.horizon()},
                {"assets", market.num_assets()},
                {"factors", market.num_factors()},
                {"options", std::move(names)}};
}

}  // namespace pwftap::cli
