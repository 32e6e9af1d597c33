#pragma once

#include "pwftap/market.hpp"
#include "pwftap/rational.hpp"
#include "pwftap/scenario_set.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pwftap {

enum class FiltrationLabel { natural, enlarged, completed };

std::string to_string(FiltrationLabel label);

/// Atoms of one partition, each a sorted list of scenario indices. Atoms are
/// ordered by their smallest member.
using Atoms = std::vector<std::vector<ScenarioIndex>>;

/// A filtration on a finite scenario space, stored as one partition per time
/// t = 0..T. Construction checks that every level is a partition and that
/// each level refines the previous one.
class FiltrationPartition {
public:
    FiltrationPartition(std::size_t universe_size, std::vector<Atoms> levels, FiltrationLabel label);

    std::size_t universe_size() const { return universe_size_; }
    std::size_t horizon() const { return levels_.size() - 1; }
    FiltrationLabel label() const { return label_; }

    const Atoms& atoms(std::size_t t) const { return levels_.at(t); }
    /// Index into atoms(t) of the atom containing w.
    std::size_t atom_of(ScenarioIndex w, std::size_t t) const { return atom_index_.at(t).at(w); }
    const std::vector<ScenarioIndex>& atom_containing(ScenarioIndex w, std::size_t t) const {
        return levels_.at(t)[atom_of(w, t)];
    }

    /// True when every atom of `other` at each time is a union of atoms of this.
    bool refines(const FiltrationPartition& other) const;

    friend bool operator==(const FiltrationPartition& a, const FiltrationPartition& b) {
        return a.levels_ == b.levels_;
    }

private:
    std::size_t universe_size_;
    std::vector<Atoms> levels_;
    std::vector<std::vector<std::size_t>> atom_index_;
    FiltrationLabel label_;
};

/// Atoms of F^{S,Y}_t: scenarios sharing the (S, Y) trajectory up to time t.
Atoms level_set_partition(const MarketModel& market, std::size_t t);

/// The natural filtration F^{S,Y} for t = 0..T.
FiltrationPartition natural_filtration(const MarketModel& market);

/// A function on scenarios used to split atoms by its level sets. It enters
/// the partitions at times from_time, from_time + 1, ..., T.
struct Mark {
    std::size_t from_time = 0;
    std::vector<std::string> labels;  ///< one label per scenario

    static Mark from_set(const ScenarioSet& set, std::size_t from_time);
    static Mark from_values(const std::vector<Rational>& values, std::size_t from_time);
    static Mark from_vectors(const std::vector<std::vector<Rational>>& values, std::size_t from_time);
};

/// Splits every atom by the joint level sets of the active marks. The
/// result refines `base` and is again a filtration.
FiltrationPartition refine_partition(const FiltrationPartition& base, const std::vector<Mark>& marks,
                                     FiltrationLabel label = FiltrationLabel::enlarged);

/// Partition of `members` into groups of equal key, ordered by smallest member.
template <class KeyFn>
Atoms group_by(const std::vector<ScenarioIndex>& members, KeyFn key);

}  // namespace pwftap

#include <map>

namespace pwftap {

template <class KeyFn>
Atoms group_by(const std::vector<ScenarioIndex>& members, KeyFn key) {
    using Key = decltype(key(ScenarioIndex{}));
    std::map<Key, std::size_t> slot;
    Atoms out;
    for (ScenarioIndex w : members) {
        auto [it, inserted] = slot.emplace(key(w), out.size());
        if (inserted) out.emplace_back();
        out[it->second].push_back(w);
    }
    return out;
}

}  // namespace pwftap
