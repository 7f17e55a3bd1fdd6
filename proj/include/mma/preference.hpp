#pragma once

// Attack-reverse preferences: the binary factual/non-factual intra-agent
// order and the trust-derived inter-agent order.

#include <set>
#include <utility>

#include "mma/af.hpp"

namespace mma {

struct MmaState;
class AgentId;

/// Strict part of a preference preorder; `less(a, b)` means a is strictly
/// less preferred than b. Reflexive and equivalence pairs are implicit.
class PreferenceOrder {
public:
    PreferenceOrder() = default;
    explicit PreferenceOrder(std::set<std::pair<ArgumentId, ArgumentId>> strict);

    bool less(const ArgumentId& a, const ArgumentId& b) const {
        return strict_.count({a, b}) != 0;
    }
    const std::set<std::pair<ArgumentId, ArgumentId>>& strict_pairs() const noexcept {
        return strict_;
    }
    bool empty() const noexcept { return strict_.empty(); }

private:
    std::set<std::pair<ArgumentId, ArgumentId>> strict_;
};

/// Binary intra-agent preference: every argument of `universe` sits either
/// at the top tier (factual) or the bottom tier.
struct IntraPreference {
    ArgSet factual;
    ArgSet universe;

    bool is_factual(const ArgumentId& a) const { return factual.count(a) != 0; }
};

/// Trust-derived order held by `owner`. Contains (a1, a2) for every
/// qualifying mutual public conflict where the owner trusts a1's agent no
/// more than a2's agent.
struct InterPreference {
    std::set<std::pair<ArgumentId, ArgumentId>> leq;
};

PreferenceOrder to_order(const IntraPreference& p);
PreferenceOrder to_order(const InterPreference& p);

/// Keeps (a1,a2) unless a1 < a2, in which case (a2,a1) is used instead.
Frame adjust(const Frame& f, const PreferenceOrder& p);

InterPreference derive_inter(const MmaState& m, const AgentId& e);

} // namespace mma
