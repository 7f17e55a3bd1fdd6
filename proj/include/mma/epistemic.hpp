#pragma once

// Manipulable multi-agent argumentation state: scopes, awareness, opponent
// models, per-pair semantics/preferences/trust, and the semantics agents
// derive from them.

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mma/af.hpp"
#include "mma/preference.hpp"

namespace mma {

class AgentId {
public:
    AgentId() = default;
    explicit AgentId(std::string id);
    AgentId(const char* id) : AgentId(std::string(id)) {}

    const std::string& str() const noexcept { return id_; }

    friend auto operator<=>(const AgentId&, const AgentId&) = default;
    friend bool operator==(const AgentId&, const AgentId&) = default;

private:
    std::string id_;
};

/// Ordered (viewer, subject) pair.
using AgentPair = std::pair<AgentId, AgentId>;

using Trust = std::int64_t;

inline constexpr Trust default_trust_bound = 1000;

struct MmaState {
    Frame global;
    Frame pub;
    std::set<AgentId> agents;
    std::map<AgentId, Frame> scope;
    std::map<AgentId, Frame> aware;
    std::map<AgentPair, SemanticsKind> sem_model;
    /// Top-tier arguments of the intra preference of each ordered pair; the
    /// universe is always args(aware[viewer]).
    std::map<AgentPair, ArgSet> factual;
    std::map<AgentPair, Trust> trust;
    /// Explicit opponent models; pairs without an entry use the lower bound.
    std::map<AgentPair, Frame> omega;
    Trust trust_bound = default_trust_bound;

    friend bool operator==(const MmaState&, const MmaState&) = default;

    const Frame& scope_of(const AgentId& e) const;
    const Frame& aware_of(const AgentId& e) const;
    SemanticsKind sem(const AgentId& viewer, const AgentId& subject) const;
    Trust trust_in(const AgentId& viewer, const AgentId& subject) const;
    const ArgSet& factual_for(const AgentId& viewer, const AgentId& subject) const;

    /// Agent whose scope contains `a`, if any.
    const AgentId* owner_of(const ArgumentId& a) const;
};

/// A broken structural condition, named after the condition it violates.
struct Violation {
    std::string condition;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string format_violations(const std::vector<Violation>& violations);

/// Empty iff `m` satisfies every structural condition of the model.
std::vector<Violation> validate(const MmaState& m);

/// Induces a scope frame: the given arguments with every global attack
/// among them.
Frame induced_scope(const Frame& global, const ArgSet& args);

IntraPreference intra(const MmaState& m, const AgentId& viewer, const AgentId& subject);

struct PerceivedFrame {
    AgentId viewer;
    AgentId subject;
    Frame frame;
};

/// Fpub ∪ (aware(viewer) ∩ scope(subject)).
Frame perceived_lower_bound(const MmaState& m, const AgentId& viewer, const AgentId& subject);

/// Viewer's model of the subject's local argumentation. Throws DomainError
/// when an explicit model falls outside the epistemic bounds.
PerceivedFrame perceived(const MmaState& m, const AgentId& viewer, const AgentId& subject);

Frame adjusted_perceived(const MmaState& m, const AgentId& viewer, const AgentId& subject);

Frame public_model(const MmaState& m, const AgentId& viewer, const AgentId& subject);

ExtensionSet trust_neutral_public_semantics(const MmaState& m, const AgentId& viewer,
                                            const AgentId& subject);

ExtensionSet trust_neutral_local_semantics(const MmaState& m, const AgentId& viewer,
                                           const AgentId& subject);

/// The public frame after both the agent's own intra preference and its
/// trust-derived inter preference have been applied.
Frame trust_adjusted_public_frame(const MmaState& m, const AgentId& e);

ExtensionSet trust_adjusted_public_semantics(const MmaState& m, const AgentId& e);

} // namespace mma
