#include "pwftap/filtration.hpp"

#include "pwftap/errors.hpp"

#include <algorithm>

namespace pwftap {

std::string to_string(FiltrationLabel label) {
    switch (label) {
        case FiltrationLabel::natural: return "natural";
        case FiltrationLabel::enlarged: return "enlarged";
        case FiltrationLabel::completed: return "completed";
    }
    return "unknown";
}

FiltrationPartition::FiltrationPartition(std::size_t universe_size, std::vector<Atoms> levels, FiltrationLabel label)
    : universe_size_(universe_size), levels_(std::move(levels)), label_(label) {
    if (levels_.empty()) throw PreconditionError("filtration needs at least one time level");
    atom_index_.assign(levels_.size(), std::vector<std::size_t>(universe_size_, universe_size_));
    for (std::size_t t = 0; t < levels_.size(); ++t) {
        for (std::size_t a = 0; a < levels_[t].size(); ++a) {
            if (levels_[t][a].empty()) throw PreconditionError("filtration has an empty atom");
            for (ScenarioIndex w : levels_[t][a]) {
                if (w >= universe_size_ || atom_index_[t][w] != universe_size_) {
                    throw PreconditionError("filtration level is not a partition");
                }
                atom_index_[t][w] = a;
            }
        }
        for (std::size_t w = 0; w < universe_size_; ++w) {
            if (atom_index_[t][w] == universe_size_) throw PreconditionError("filtration level does not cover X");
        }
        if (t > 0) {
            for (const auto& atom : levels_[t]) {
                std::size_t parent = atom_index_[t - 1][atom.front()];
                for (ScenarioIndex w : atom) {
                    if (atom_index_[t - 1][w] != parent) {
                        throw PreconditionError("filtration level does not refine the previous one");
                    }
                }
            }
        }
    }
}

bool FiltrationPartition::refines(const FiltrationPartition& other) const {
    if (other.universe_size_ != universe_size_ || other.levels_.size() != levels_.size()) return false;
    for (std::size_t t = 0; t < levels_.size(); ++t) {
        for (const auto& atom : levels_[t]) {
            std::size_t coarse = other.atom_of(atom.front(), t);
            for (ScenarioIndex w : atom) {
                if (other.atom_of(w, t) != coarse) return false;
            }
        }
    }
    return true;
}

Atoms level_set_partition(const MarketModel& market, std::size_t t) {
    if (t > market.horizon()) throw PreconditionError("level_set_partition: time beyond horizon");
    std::vector<ScenarioIndex> all = market.all_scenarios().members();
    return group_by(all, [&](ScenarioIndex w) {
        std::vector<Rational> key;
        for (std::size_t s = 0; s <= t; ++s) {
            auto p = market.price(w, s);
            auto y = market.factor(w, s);
            key.insert(key.end(), p.begin(), p.end());
            key.insert(key.end(), y.begin(), y.end());
        }
        return key;
    });
}

FiltrationPartition natural_filtration(const MarketModel& market) {
    std::vector<Atoms> levels;
    for (std::size_t t = 0; t <= market.horizon(); ++t) levels.push_back(level_set_partition(market, t));
    return FiltrationPartition(market.num_scenarios(), std::move(levels), FiltrationLabel::natural);
}

Mark Mark::from_set(const ScenarioSet& set, std::size_t from_time) {
    Mark mark;
    mark.from_time = from_time;
    for (std::size_t w = 0; w < set.universe_size(); ++w) mark.labels.push_back(set.contains(w) ? "1" : "0");
    return mark;
}

Mark Mark::from_values(const std::vector<Rational>& values, std::size_t from_time) {
    Mark mark;
    mark.from_time = from_time;
    for (const auto& v : values) mark.labels.push_back(to_string(v));
    return mark;
}

Mark Mark::from_vectors(const std::vector<std::vector<Rational>>& values, std::size_t from_time) {
    Mark mark;
    mark.from_time = from_time;
    for (const auto& v : values) {
        std::string label;
        for (const auto& x : v) label += to_string(x) + ",";
        mark.labels.push_back(std::move(label));
    }
    return mark;
}

FiltrationPartition refine_partition(const FiltrationPartition& base, const std::vector<Mark>& marks,
                                     FiltrationLabel label) {
    for (const auto& mark : marks) {
        if (mark.labels.size() != base.universe_size()) {
            throw PreconditionError("refine_partition: mark is not defined on every scenario");
        }
    }
    std::vector<Atoms> levels;
    for (std::size_t t = 0; t <= base.horizon(); ++t) {
        Atoms level;
        for (const auto& atom : base.atoms(t)) {
            Atoms pieces = group_by(atom, [&](ScenarioIndex w) {
                std::vector<std::string> key;
                for (const auto& mark : marks) {
                    if (mark.from_time <= t) key.push_back(mark.labels[w]);
                }
                return key;
            });
            for (auto& piece : pieces) level.push_back(std::move(piece));
        }
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
        levels.push_back(std::move(level));
    }
    return FiltrationPartition(base.universe_size(), std::move(levels), label);
}

}  // namespace pwftap
