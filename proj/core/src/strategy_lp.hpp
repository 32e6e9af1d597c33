#pragma once

// Variable layout shared by every LP whose unknowns include a semi-static
// strategy (alpha, H) predictable in a given filtration.

#include "pwftap/filtration.hpp"
#include "pwftap/lp.hpp"
#include "pwftap/market.hpp"
#include "pwftap/strategy.hpp"

#include <limits>
#include <memory>
#include <vector>

namespace pwftap::detail {

class StrategyLayout {
public:
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    /// Allocates variables starting at `first_var`: k option weights per
    /// time-0 atom meeting `support`, and d holdings per (t, atom at t-1)
    /// whose scenarios in `support` do not all have a zero increment.
    StrategyLayout(const MarketModel& market, std::shared_ptr<const FiltrationPartition> filtration,
                   const std::vector<Payoff>& options, const ScenarioSet& support, std::size_t first_var = 0)
        : market_(market), filtration_(std::move(filtration)), options_(options), first_(first_var) {
        std::size_t next = first_var;
        const std::size_t k = options_.size();
        const Atoms& roots = filtration_->atoms(0);
        alpha_.assign(roots.size(), none);
        for (std::size_t a = 0; a < roots.size(); ++a) {
            if (k == 0 || !meets(roots[a], support)) continue;
            alpha_[a] = next;
            next += k;
        }
        h_.assign(market.horizon(), {});
        for (std::size_t t = 1; t <= market.horizon(); ++t) {
            const Atoms& atoms = filtration_->atoms(t - 1);
            h_[t - 1].assign(atoms.size(), none);
            for (std::size_t a = 0; a < atoms.size(); ++a) {
                bool moves = false;
                for (ScenarioIndex w : atoms[a]) {
                    if (support.contains(w) && !is_zero(market.increment(w, t))) {
                        moves = true;
                        break;
                    }
                }
                if (!moves) continue;
                h_[t - 1][a] = next;
                next += market.num_assets();
            }
        }
        end_ = next;
    }

    std::size_t first() const { return first_; }
    std::size_t end() const { return end_; }

    /// Index of the first alpha variable for scenario w, or `none`.
    std::size_t alpha_var(ScenarioIndex w) const { return alpha_[filtration_->atom_of(w, 0)]; }

    /// row += coeff * (alpha.Phi(w) + (H o S)_T(w)).
    void add_payoff(std::vector<Rational>& row, ScenarioIndex w, const Rational& coeff = Rational(1)) const {
        std::size_t a = alpha_var(w);
        if (a != none) {
            for (std::size_t j = 0; j < options_.size(); ++j) {
                if (sgn(options_[j][w]) != 0) row[a + j] += coeff * options_[j][w];
            }
        }
        for (std::size_t t = 1; t <= market_.horizon(); ++t) {
            std::size_t h = h_[t - 1][filtration_->atom_of(w, t - 1)];
            if (h == none) continue;
            auto inc = market_.increment(w, t);
            for (std::size_t j = 0; j < inc.size(); ++j) {
                if (sgn(inc[j]) != 0) row[h + j] += coeff * inc[j];
            }
        }
    }

    Strategy extract(const std::vector<Rational>& primal) const {
        Strategy s = Strategy::zero(market_, options_.size(), filtration_);
        for (std::size_t w = 0; w < market_.num_scenarios(); ++w) {
            std::size_t a = alpha_var(w);
            if (a == none) continue;
            for (std::size_t j = 0; j < options_.size(); ++j) s.alpha[w][j] = primal[a + j];
        }
        for (std::size_t t = 1; t <= market_.horizon(); ++t) {
            for (std::size_t w = 0; w < market_.num_scenarios(); ++w) {
                std::size_t h = h_[t - 1][filtration_->atom_of(w, t - 1)];
                if (h == none) continue;
                for (std::size_t j = 0; j < market_.num_assets(); ++j) s.H[t - 1][w][j] = primal[h + j];
            }
        }
        return s;
    }

private:
    static bool meets(const std::vector<ScenarioIndex>& atom, const ScenarioSet& set) {
        for (ScenarioIndex w : atom) {
            if (set.contains(w)) return true;
        }
        return false;
    }

    const MarketModel& market_;
    std::shared_ptr<const FiltrationPartition> filtration_;
    const std::vector<Payoff>& options_;
    std::size_t first_;
    std::size_t end_ = 0;
    std::vector<std::size_t> alpha_;
    std::vector<std::vector<std::size_t>> h_;
};

}  // namespace pwftap::detail
