#pragma once

// Public announcements, deception/honesty detection, trust revision and the
// composed update.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mma/af.hpp"
#include "mma/epistemic.hpp"

namespace mma {

struct AnnouncementEvent {
    Frame payload;
    std::set<AgentId> announcers;

    friend bool operator==(const AnnouncementEvent&, const AnnouncementEvent&) = default;
};

enum class DetectionVerdict { honest, dishonest, undetermined };

const char* to_string(DetectionVerdict v) noexcept;

struct TrustPolicy {
    Trust delta_honest = 1;
    Trust delta_dishonest = 1;
};

class InvalidAnnouncement : public std::runtime_error {
public:
    explicit InvalidAnnouncement(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Definedness of an announcement. Besides the leak and repetition
/// conditions, payload arguments must already exist in the global frame and
/// the announcers must be known agents.
std::vector<Violation> check_announcement(const MmaState& m, const AnnouncementEvent& ev);

struct Transition {
    MmaState before;
    AnnouncementEvent event;
    MmaState after;
};

/// Unions the payload into the global frame, the public frame, every
/// awareness frame and every explicit opponent model. Scope arguments are
/// fixed; scope attacks are re-induced from the expanded global frame.
Transition announce(const MmaState& m, const AnnouncementEvent& ev);

/// { X ∩ keep : X ∈ g }.
ExtensionSet restrict_extensions(const ExtensionSet& g, const ArgSet& keep);

/// Intermediate values of a single detection, kept for tracing.
struct DetectionDetail {
    ArgSet checked;
    ExtensionSet source;
    ExtensionSet target;
    DetectionVerdict verdict = DetectionVerdict::undetermined;
};

/// Detection evaluated on an already-announced state.
DetectionDetail detect_after(const MmaState& after, const AgentId& viewer, const AgentId& subject,
                             const Frame& payload);

DetectionVerdict detect(const MmaState& m, const AgentId& viewer, const AgentId& subject,
                        const AnnouncementEvent& ev);

using VerdictMatrix = std::map<AgentPair, DetectionVerdict>;
using DetectionMatrix = std::map<AgentPair, DetectionDetail>;

/// Detection details for every ordered pair of distinct agents, computed on
/// the post-announcement state. Pairs are independent and evaluated in
/// parallel under Execution::parallel; the result does not depend on it.
DetectionMatrix detection_matrix(const Transition& t, Execution exec = Execution::parallel);

VerdictMatrix verdict_matrix(const Transition& t, Execution exec = Execution::parallel);

/// New trust values for `after`; saturates at ±after.trust_bound.
MmaState apply_verdicts(const MmaState& after, const VerdictMatrix& verdicts, const TrustPolicy& policy);

MmaState revise(const MmaState& before, const AnnouncementEvent& ev, const MmaState& after,
                const TrustPolicy& policy);

MmaState update(const MmaState& m, const AnnouncementEvent& ev, const TrustPolicy& policy);

} // namespace mma
