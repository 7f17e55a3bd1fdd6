#include "mma/preference.hpp"

#include "mma/epistemic.hpp"

namespace mma {

PreferenceOrder::PreferenceOrder(std::set<std::pair<ArgumentId, ArgumentId>> strict)
    : strict_(std::move(strict)) {
    for (const auto& [a, b] : strict_) {
        if (a == b || strict_.count({b, a})) {
            throw DomainError("strict preference between '" + a.str() + "' and '" + b.str() +
                              "' is not asymmetric");
        }
    }
}

PreferenceOrder to_order(const IntraPreference& p) {
    std::set<std::pair<ArgumentId, ArgumentId>> strict;
    for (const auto& low : p.universe) {
        if (p.is_factual(low)) continue;
        for (const auto& high : p.factual) {
            if (p.universe.count(high)) strict.emplace(low, high);
        }
    }
    return PreferenceOrder(std::move(strict));
}

PreferenceOrder to_order(const InterPreference& p) {
    std::set<std::pair<ArgumentId, ArgumentId>> strict;
    for (const auto& [a, b] : p.leq) {
        if (a != b && !p.leq.count({b, a})) strict.emplace(a, b);
    }
    return PreferenceOrder(std::move(strict));
}

Frame adjust(const Frame& f, const PreferenceOrder& p) {
    if (!f.is_dung()) throw DomainError("adjust requires a Dung frame");
    if (p.empty()) return f;
    AttackSet out;
    for (const auto& [from, to] : f.attacks()) {
        if (p.less(from, to)) {
            out.insert({to, from});
        } else {
            out.insert({from, to});
        }
    }
    return Frame(f.args(), std::move(out));
}

InterPreference derive_inter(const MmaState& m, const AgentId& e) {
    if (!m.agents.count(e)) throw DomainError("unknown agent '" + e.str() + "'");
    const ArgSet& aware_args = m.aware_of(e).args();
    const ArgSet& own_factual = m.factual_for(e, e);

    InterPreference out;
    for (const auto& [a1, a2] : m.pub.attacks()) {
        if (!m.pub.attacks(a2, a1)) continue;
        if (!aware_args.count(a1) || !aware_args.count(a2)) continue;
        if (own_factual.count(a1) || own_factual.count(a2)) continue;
        const AgentId* e1 = m.owner_of(a1);
        const AgentId* e2 = m.owner_of(a2);
        if (e1 == nullptr || e2 == nullptr) continue;
        if (m.trust_in(e, *e1) <= m.trust_in(e, *e2)) out.leq.emplace(a1, a2);
    }
    return out;
}

} // namespace mma
