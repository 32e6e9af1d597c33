#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pwftap {

/// Index of a scenario in MarketModel::scenarios() order.
using ScenarioIndex = std::size_t;

/// Subset of a fixed finite scenario universe, stored as a membership mask.
class ScenarioSet {
public:
    ScenarioSet() = default;
    explicit ScenarioSet(std::size_t universe_size, bool full = false) : mask_(universe_size, full) {}
    ScenarioSet(std::size_t universe_size, std::initializer_list<ScenarioIndex> members);
    ScenarioSet(std::size_t universe_size, const std::vector<ScenarioIndex>& members);

    static ScenarioSet full(std::size_t universe_size) { return ScenarioSet(universe_size, true); }

    std::size_t universe_size() const { return mask_.size(); }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    bool contains(ScenarioIndex w) const { return w < mask_.size() && mask_[w]; }

    void insert(ScenarioIndex w) { mask_.at(w) = true; }
    void erase(ScenarioIndex w) { mask_.at(w) = false; }

    /// Members in increasing index order.
    std::vector<ScenarioIndex> members() const;

    ScenarioSet operator|(const ScenarioSet& other) const;
    ScenarioSet operator&(const ScenarioSet& other) const;
    ScenarioSet operator-(const ScenarioSet& other) const;
    bool is_subset_of(const ScenarioSet& other) const;

    friend bool operator==(const ScenarioSet&, const ScenarioSet&) = default;

private:
    std::vector<bool> mask_;
};

}  // namespace pwftap
