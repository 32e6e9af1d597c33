#include "pwftap/aggregator.hpp"

#include "pwftap/errors.hpp"

namespace pwftap {

SplitResult conditional_split(const MarketModel& market, std::size_t t, const ScenarioSet& gamma) {
    if (t < 1 || t > market.horizon()) throw PreconditionError("conditional_split: time must lie in 1..T");
    if (gamma.universe_size() != market.num_scenarios()) {
        throw PreconditionError("conditional_split: gamma lives in a different scenario space");
    }
    const Atoms atoms = level_set_partition(market, t - 1);
    const std::size_t d = market.num_assets();
    SplitResult out;
    out.time = t;
    out.gamma = gamma;
    out.cells.assign(1, ScenarioSet(market.num_scenarios()));

    for (std::size_t a = 0; a < atoms.size(); ++a) {
        std::vector<ScenarioIndex> remaining;
        for (ScenarioIndex w : atoms[a]) {
            if (gamma.contains(w)) remaining.push_back(w);
        }
        for (std::size_t round = 1; !remaining.empty(); ++round) {
            std::vector<Point> points;
            for (ScenarioIndex w : remaining) {
                auto inc = market.increment(w, t);
                points.emplace_back(inc.begin(), inc.end());
            }
            SupportSeparator sep = max_support_separator(points);
            if (sep.strict.empty()) break;
            if (round > d) throw InvariantBreach("conditional_split: more than d rounds on one atom");
            if (out.beta < round) {
                out.beta = round;
                out.separators.emplace_back(atoms.size(), Point(d));
                out.cells.emplace_back(market.num_scenarios());
            }
            out.separators[round - 1][a] = sep.H;
            std::vector<ScenarioIndex> kept;
            std::size_t next_strict = 0;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                if (next_strict < sep.strict.size() && sep.strict[next_strict] == i) {
                    out.cells[round].insert(remaining[i]);
                    ++next_strict;
                } else {
                    kept.push_back(remaining[i]);
                }
            }
            remaining = std::move(kept);
        }
        for (ScenarioIndex w : remaining) out.cells[0].insert(w);
    }
    return out;
}

EfficientLadder efficient_scenarios(const MarketModel& market, const ScenarioSet& omega) {
    const std::size_t T = market.horizon();
    EfficientLadder ladder;
    ladder.omega_t.assign(T + 1, omega);
    ladder.splits.resize(T);
    for (std::size_t t = T; t >= 1; --t) {
        ladder.splits[t - 1] = conditional_split(market, t, ladder.omega_t[t]);
        ladder.omega_t[t - 1] = ladder.splits[t - 1].cells[0];
    }
    return ladder;
}

EfficientLadder efficient_scenarios(const MarketModel& market) {
    return efficient_scenarios(market, market.omega());
}

std::vector<Mark> aggregator_marks(const Strategy& H_star) {
    std::vector<Mark> marks;
    for (std::size_t t = 1; t <= H_star.H.size(); ++t) marks.push_back(Mark::from_vectors(H_star.H[t - 1], t - 1));
    return marks;
}

AggregatorResult build_aggregator(const MarketModel& market, const ScenarioSet& omega) {
    AggregatorResult out;
    out.ladder = efficient_scenarios(market, omega);
    const FiltrationPartition natural = natural_filtration(market);
    Strategy H = Strategy::zero(market, 0, nullptr);
    for (std::size_t t = 1; t <= market.horizon(); ++t) {
        const SplitResult& split = out.ladder.splits[t - 1];
        for (std::size_t i = 1; i <= split.beta; ++i) {
            for (ScenarioIndex w : split.cells[i].members()) {
                H.H[t - 1][w] = split.separators[i - 1][natural.atom_of(w, t - 1)];
            }
        }
        // Every round's separator gains exactly zero on B^0, so the kernel
        // scenarios of an atom can share its last separator. This keeps H*_t
        // constant on Gamma-atoms split in a single round and avoids needless
        // refinement of the aggregating filtration.
        for (ScenarioIndex w : split.cells[0].members()) {
            const std::size_t a = natural.atom_of(w, t - 1);
            for (std::size_t i = split.beta; i >= 1; --i) {
                if (!is_zero(split.separators[i - 1][a])) {
                    H.H[t - 1][w] = split.separators[i - 1][a];
                    break;
                }
            }
        }
    }
    out.filtration = std::make_shared<const FiltrationPartition>(refine_partition(natural, aggregator_marks(H)));
    H.filtration = out.filtration;
    out.H_star = std::move(H);
    return out;
}

AggregatorResult build_aggregator(const MarketModel& market) {
    return build_aggregator(market, market.omega());
}

}  // namespace pwftap
