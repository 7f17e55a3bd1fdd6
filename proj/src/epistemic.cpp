#include "mma/epistemic.hpp"

#include <sstream>

namespace mma {

AgentId::AgentId(std::string id) : id_(std::move(id)) {
    if (id_.empty()) throw DomainError("agent id must be nonempty");
}

namespace {

template <typename Map, typename Key>
const auto& lookup(const Map& map, const Key& key, const char* what, const std::string& name) {
    const auto it = map.find(key);
    if (it == map.end()) throw DomainError(std::string("no ") + what + " for " + name);
    return it->second;
}

std::string pair_name(const AgentId& a, const AgentId& b) {
    return "(" + a.str() + "," + b.str() + ")";
}

void require_agent(const MmaState& m, const AgentId& e) {
    if (!m.agents.count(e)) throw DomainError("unknown agent '" + e.str() + "'");
}

} // namespace

const Frame& MmaState::scope_of(const AgentId& e) const {
    return lookup(scope, e, "scope", e.str());
}

const Frame& MmaState::aware_of(const AgentId& e) const {
    return lookup(aware, e, "awareness", e.str());
}

SemanticsKind MmaState::sem(const AgentId& viewer, const AgentId& subject) const {
    return lookup(sem_model, AgentPair{viewer, subject}, "semantics model", pair_name(viewer, subject));
}

Trust MmaState::trust_in(const AgentId& viewer, const AgentId& subject) const {
    return lookup(trust, AgentPair{viewer, subject}, "trust value", pair_name(viewer, subject));
}

const ArgSet& MmaState::factual_for(const AgentId& viewer, const AgentId& subject) const {
    static const ArgSet none;
    const auto it = factual.find({viewer, subject});
    return it == factual.end() ? none : it->second;
}

const AgentId* MmaState::owner_of(const ArgumentId& a) const {
    for (const auto& [e, f] : scope) {
        if (f.contains(a)) return &e;
    }
    return nullptr;
}

std::string format_violations(const std::vector<Violation>& violations) {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << "(" << v.condition << ") " << v.detail << '\n';
    }
    return os.str();
}

Frame induced_scope(const Frame& global, const ArgSet& args) {
    return restrict(global, args);
}

std::vector<Violation> validate(const MmaState& m) {
    std::vector<Violation> out;
    auto report = [&](std::string condition, std::string detail) {
        out.push_back({std::move(condition), std::move(detail)});
    };

    if (!m.global.is_dung()) report("typing", "global frame is not a Dung frame");
    if (!m.pub.is_subframe_of(m.global)) report("typing", "public frame is not a sub-frame of the global frame");
    if (m.agents.empty()) report("typing", "no agents");

    for (const auto& e : m.agents) {
        if (!m.scope.count(e)) {
            report("typing", "agent " + e.str() + " has no scope");
            continue;
        }
        if (!m.aware.count(e)) {
            report("typing", "agent " + e.str() + " has no awareness frame");
            continue;
        }
        const Frame& fe = m.scope.at(e);
        const Frame& fa = m.aware.at(e);
        if (fe.empty()) report("typing", "scope of " + e.str() + " is empty");
        if (!fe.is_subframe_of(m.global)) report("typing", "scope of " + e.str() + " is not a sub-frame of the global frame");
        if (!fa.is_subframe_of(m.global)) report("typing", "awareness of " + e.str() + " is not a sub-frame of the global frame");

        // (1) scope attacks are exactly the global attacks among scope args
        if (fe.attacks() != restrict(m.global, fe.args()).attacks()) {
            report("local scopes", "attacks of scope " + e.str() + " " + format_attacks(fe.attacks()) +
                                       " differ from induced global attacks " +
                                       format_attacks(restrict(m.global, fe.args()).attacks()));
        }
        // (2)
        if (!fe.is_subframe_of(fa)) {
            report("local agent argumentation", "scope of " + e.str() + " is not contained in its awareness");
        }
        if (restrict(fa, fe.args()).attacks() != fe.attacks()) {
            report("local agent argumentation",
                   "awareness of " + e.str() + " does not reflect its scope attacks exactly");
        }
        // (3)
        if (!m.pub.is_subframe_of(fa)) {
            report("public subsumption", "public frame is not contained in awareness of " + e.str());
        }
    }
    for (const auto& [e, _] : m.scope) {
        if (!m.agents.count(e)) report("typing", "scope given for unknown agent " + e.str());
    }
    for (auto e1 = m.agents.begin(); e1 != m.agents.end(); ++e1) {
        for (auto e2 = std::next(e1); e2 != m.agents.end(); ++e2) {
            if (!m.scope.count(*e1) || !m.scope.count(*e2)) continue;
            const ArgSet shared = set_intersection(m.scope.at(*e1).args(), m.scope.at(*e2).args());
            if (!shared.empty()) {
                report("local scopes", "scopes of " + e1->str() + " and " + e2->str() + " share " + format_set(shared));
            }
        }
    }

    for (const auto& e1 : m.agents) {
        for (const auto& e2 : m.agents) {
            const AgentPair key{e1, e2};
            if (!m.sem_model.count(key)) report("typing", "no semantics model for " + pair_name(e1, e2));
            if (!m.trust.count(key)) {
                report("typing", "no trust value for " + pair_name(e1, e2));
            } else if (const Trust t = m.trust.at(key); t < -m.trust_bound || t > m.trust_bound) {
                report("trust range", "trust " + pair_name(e1, e2) + " = " + std::to_string(t) +
                                          " outside [-" + std::to_string(m.trust_bound) + "," +
                                          std::to_string(m.trust_bound) + "]");
            }
            // (4)-(6): the binary order is well formed when its top tier
            // lies within the viewer's awareness.
            if (m.aware.count(e1)) {
                const ArgSet& facts = m.factual_for(e1, e2);
                for (const auto& a : facts) {
                    if (!m.aware.at(e1).contains(a)) {
                        report("partial order 1", "factual argument " + a.str() + " of " + pair_name(e1, e2) +
                                                      " is outside the awareness of " + e1.str());
                    }
                }
            }
            // (7)
            if (m.scope.count(e2)) {
                for (const auto& a : m.factual_for(e1, e1)) {
                    if (!m.scope.at(e2).contains(a)) continue;
                    if (!m.factual_for(e2, e2).count(a)) {
                        report("knowledge", a.str() + " is factual to " + e1.str() + " but not to its owner " + e2.str());
                    }
                    if (!m.factual_for(e1, e2).count(a)) {
                        report("knowledge", a.str() + " is factual to " + e1.str() + " but not in its model of " + e2.str());
                    }
                }
            }
            // opponent models
            if (auto it = m.omega.find(key); it != m.omega.end() && m.aware.count(e1) && m.scope.count(e2)) {
                const Frame& w = it->second;
                if (e1 == e2 && w != m.aware.at(e1)) {
                    report("epistemic bounds", "self model of " + e1.str() + " must equal its awareness");
                }
                if (!perceived_lower_bound(m, e1, e2).is_subframe_of(w) || !w.is_subframe_of(m.aware.at(e1))) {
                    report("epistemic bounds", "model " + pair_name(e1, e2) + " is outside its epistemic bounds");
                }
            }
        }
    }
    for (const auto& [key, _] : m.factual) {
        if (!m.agents.count(key.first) || !m.agents.count(key.second)) {
            report("typing", "factual set given for unknown pair " + pair_name(key.first, key.second));
        }
    }
    // (8) the inter preference is derived on demand, so it holds by construction.
    return out;
}

IntraPreference intra(const MmaState& m, const AgentId& viewer, const AgentId& subject) {
    require_agent(m, viewer);
    require_agent(m, subject);
    return IntraPreference{m.factual_for(viewer, subject), m.aware_of(viewer).args()};
}

Frame perceived_lower_bound(const MmaState& m, const AgentId& viewer, const AgentId& subject) {
    return combine(m.pub, combine(m.aware_of(viewer), m.scope_of(subject), SetOp::intersection), SetOp::union_);
}

PerceivedFrame perceived(const MmaState& m, const AgentId& viewer, const AgentId& subject) {
    require_agent(m, viewer);
    require_agent(m, subject);
    if (viewer == subject) return {viewer, subject, m.aware_of(viewer)};
    if (const auto it = m.omega.find({viewer, subject}); it != m.omega.end()) {
        const Frame& w = it->second;
        if (!perceived_lower_bound(m, viewer, subject).is_subframe_of(w) || !w.is_subframe_of(m.aware_of(viewer))) {
            throw DomainError("model of " + subject.str() + " held by " + viewer.str() +
                              " violates its epistemic bounds");
        }
        return {viewer, subject, w};
    }
    return {viewer, subject, perceived_lower_bound(m, viewer, subject)};
}

Frame adjusted_perceived(const MmaState& m, const AgentId& viewer, const AgentId& subject) {
    return adjust(perceived(m, viewer, subject).frame, to_order(intra(m, viewer, subject)));
}

Frame public_model(const MmaState& m, const AgentId& viewer, const AgentId& subject) {
    return adjust(m.pub, to_order(intra(m, viewer, subject)));
}

ExtensionSet trust_neutral_public_semantics(const MmaState& m, const AgentId& viewer, const AgentId& subject) {
    return semantics(m.sem(viewer, subject), public_model(m, viewer, subject));
}

ExtensionSet trust_neutral_local_semantics(const MmaState& m, const AgentId& viewer, const AgentId& subject) {
    return semantics(m.sem(viewer, subject), adjusted_perceived(m, viewer, subject));
}

Frame trust_adjusted_public_frame(const MmaState& m, const AgentId& e) {
    return adjust(public_model(m, e, e), to_order(derive_inter(m, e)));
}

ExtensionSet trust_adjusted_public_semantics(const MmaState& m, const AgentId& e) {
    require_agent(m, e);
    return semantics(m.sem(e, e), trust_adjusted_public_frame(m, e));
}

} // namespace mma
