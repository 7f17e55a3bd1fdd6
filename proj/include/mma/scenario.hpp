#pragma once

// Scenario documents, script execution with tracing, semantics queries and
// graph export.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mma/dynamics.hpp"
#include "mma/epistemic.hpp"

namespace mma {

struct ArgumentInfo {
    std::optional<AgentId> owner;
    std::string label;

    friend bool operator==(const ArgumentInfo&, const ArgumentInfo&) = default;
};

struct ScriptStep {
    AnnouncementEvent event;
    std::string note;

    friend bool operator==(const ScriptStep&, const ScriptStep&) = default;
};

struct Scenario {
    MmaState initial;
    std::map<ArgumentId, ArgumentInfo> arguments;
    std::vector<ScriptStep> script;
    TrustPolicy policy;
    std::string notes;
};

class ScenarioError : public std::runtime_error {
public:
    enum class Kind { parse, schema, validation };

    ScenarioError(Kind kind, const std::string& message, std::vector<Violation> violations = {});

    Kind kind() const noexcept { return kind_; }
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    Kind kind_;
    std::vector<Violation> violations_;
};

Scenario load_scenario(std::istream& source);
Scenario load_scenario_file(const std::string& path);
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& sc);

struct TraceStep {
    std::size_t index = 0;
    AnnouncementEvent event;
    std::string note;
    ArgSet public_added_args;
    AttackSet public_added_attacks;
    ArgSet global_added_args;
    AttackSet global_added_attacks;
    DetectionMatrix detections;
    std::map<AgentPair, Trust> trust_before;
    std::map<AgentPair, Trust> trust_after;
    std::optional<std::map<AgentId, ExtensionSet>> trust_adjusted;
};

struct RunFailure {
    std::size_t step = 0;
    std::vector<Violation> violations;
};

struct Trace {
    std::vector<TraceStep> steps;
    /// states[0] is the initial state; states[k] follows step k.
    std::vector<MmaState> states;
    std::optional<RunFailure> failure;

    const MmaState& final_state() const { return states.back(); }
};

struct RunOptions {
    bool with_semantics = false;
    /// Stop after this many steps (the whole script when unset).
    std::optional<std::size_t> max_steps;
    Execution exec = Execution::parallel;
};

/// Applies the script step by step. Halts at the first invalid
/// announcement, recording it in `failure`.
Trace run(const Scenario& sc, const RunOptions& options = {});

nlohmann::json trace_to_json(const Scenario& sc, const Trace& trace);
std::string trace_to_table(const Trace& trace);

/// State after `step` announcements (0 = initial). Throws
/// InvalidAnnouncement if the script breaks earlier, DomainError if `step`
/// exceeds the script.
MmaState state_at(const Scenario& sc, std::size_t step);

enum class View { public_, local, trust_adjusted };

View parse_view(const std::string& text);

/// `subject` is ignored for View::trust_adjusted.
ExtensionSet query(const MmaState& m, const AgentId& viewer, const AgentId& subject, View view,
                   std::optional<SemanticsKind> kind = std::nullopt);

/// Selector grammar: global | public | aware:<e> | perceived:<v>:<s> |
/// adjusted:<v>:<s> | public-model:<v>:<s> | trust-adjusted:<e>.
Frame select_view(const MmaState& m, const std::string& selector);

/// Graphviz DOT rendering. Nodes are grouped into one cluster per agent
/// scope; publicly announced arguments are drawn filled.
std::string export_graph(const MmaState& m, const std::string& selector,
                         const std::map<ArgumentId, ArgumentInfo>& arguments = {});

} // namespace mma
