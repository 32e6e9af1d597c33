#include "pwftap/scenario_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace pwftap {

ScenarioSet::ScenarioSet(std::size_t universe_size, std::initializer_list<ScenarioIndex> members)
    : mask_(universe_size, false) {
    for (ScenarioIndex w : members) mask_.at(w) = true;
}

ScenarioSet::ScenarioSet(std::size_t universe_size, const std::vector<ScenarioIndex>& members)
    : mask_(universe_size, false) {
    for (ScenarioIndex w : members) mask_.at(w) = true;
}

std::size_t ScenarioSet::size() const {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<ScenarioIndex> ScenarioSet::members() const {
    std::vector<ScenarioIndex> out;
    for (std::size_t i = 0; i < mask_.size(); ++i) {
        if (mask_[i]) out.push_back(i);
    }
    return out;
}

namespace {
void check_same_universe(const ScenarioSet& a, const ScenarioSet& b) {
    if (a.universe_size() != b.universe_size()) {
        throw std::invalid_argument("ScenarioSet: operands live in different universes");
    }
}
}  // namespace

ScenarioSet ScenarioSet::operator|(const ScenarioSet& other) const {
    check_same_universe(*this, other);
    ScenarioSet out(*this);
    for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] || other.mask_[i];
    return out;
}

ScenarioSet ScenarioSet::operator&(const ScenarioSet& other) const {
    check_same_universe(*this, other);
    ScenarioSet out(*this);
    for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && other.mask_[i];
    return out;
}

ScenarioSet ScenarioSet::operator-(const ScenarioSet& other) const {
    check_same_universe(*this, other);
    ScenarioSet out(*this);
    for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && !other.mask_[i];
    return out;
}

bool ScenarioSet::is_subset_of(const ScenarioSet& other) const {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < mask_.size(); ++i) {
        if (mask_[i] && !other.mask_[i]) return false;
    }
    return true;
}

}  // namespace pwftap
