#pragma once

#include <stdexcept>
#include <vector>

#include "rrc/lex_vector.hpp"

namespace rrc {

enum class Component { discrete, dense };  // Z or Q

/// Lexicographic product of rank-one value groups. Component 1 is the most
/// significant coordinate; rank k puts the maximal ideal at level k.
class ValueGroup {
public:
    explicit ValueGroup(std::vector<Component> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) throw std::invalid_argument("ValueGroup: rank must be >= 1");
    }

    int rank() const { return static_cast<int>(comps_.size()); }
    Component component(int j) const { return comps_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<Component>& components() const { return comps_; }

    // Group elements carry integer coordinates at discrete components.
    bool is_valid_element(const LexVector& v) const {
        if (static_cast<int>(v.size()) != rank()) return false;
        for (int j = 1; j <= rank(); ++j)
            if (component(j) == Component::discrete && !v[static_cast<std::size_t>(j - 1)].is_integer())
                return false;
        return true;
    }

    friend bool operator==(const ValueGroup& a, const ValueGroup& b) {
        return a.comps_ == b.comps_;
    }
    friend bool operator!=(const ValueGroup& a, const ValueGroup& b) { return !(a == b); }

private:
    std::vector<Component> comps_;
};

// The nonmaximal prime at level j is idempotent exactly when component j is
// dense, so the group admits one iff some component below the top is dense.
inline bool has_nonmax_idempotent_prime(const ValueGroup& g) {
    for (int j = 1; j < g.rank(); ++j)
        if (g.component(j) == Component::dense) return true;
    return false;
}

struct PrimeSpec {
    int level = 0;  // P_j = { g : prefix_j(g) > 0 }; level k is the maximal ideal
};

}  // namespace rrc
