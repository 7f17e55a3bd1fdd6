#include "mma/dynamics.hpp"

#include <algorithm>
#include <exception>

namespace mma {

const char* to_string(DetectionVerdict v) noexcept {
    switch (v) {
    case DetectionVerdict::honest: return "honest";
    case DetectionVerdict::dishonest: return "dishonest";
    case DetectionVerdict::undetermined: return "undetermined";
    }
    return "?";
}

InvalidAnnouncement::InvalidAnnouncement(std::vector<Violation> violations)
    : std::runtime_error("invalid announcement:\n" + format_violations(violations)),
      violations_(std::move(violations)) {}

std::vector<Violation> check_announcement(const MmaState& m, const AnnouncementEvent& ev) {
    std::vector<Violation> out;
    const Frame& p = ev.payload;

    if (ev.announcers.empty()) out.push_back({"announcers", "announcement has no announcer"});
    for (const auto& e : ev.announcers) {
        if (!m.agents.count(e)) out.push_back({"announcers", "unknown announcer " + e.str()});
    }
    for (const auto& a : p.args()) {
        if (!m.global.contains(a)) out.push_back({"known arguments", a.str() + " is not an argument of the global frame"});
    }

    // (no leak): every attack endpoint is announced now or already public.
    for (const auto& [from, to] : p.attacks()) {
        for (const auto& end : {from, to}) {
            if (!p.contains(end) && !m.pub.contains(end)) {
                out.push_back({"no leak", "attack (" + from.str() + "," + to.str() + ") refers to " + end.str() +
                                              ", which is neither announced nor public"});
            }
        }
    }

    // (no repetition): attacks between already-public arguments must be new,
    // and an announcement must add something to the public frame.
    for (const auto& r : p.attacks()) {
        if (m.pub.contains(r.from) && m.pub.contains(r.to) && m.pub.attacks(r.from, r.to)) {
            out.push_back({"no repetition", "attack (" + r.from.str() + "," + r.to.str() + ") is already public"});
        }
    }
    const bool adds_args = !is_subset(p.args(), m.pub.args());
    const bool adds_attacks = std::any_of(p.attacks().begin(), p.attacks().end(),
                                          [&](const Attack& r) { return !m.pub.attacks(r.from, r.to); });
    if (!adds_args && !adds_attacks) {
        out.push_back({"no repetition", "payload " + format_set(p.args()) + " " + format_attacks(p.attacks()) +
                                            " is already contained in the public frame"});
    }
    return out;
}

Transition announce(const MmaState& m, const AnnouncementEvent& ev) {
    if (auto violations = check_announcement(m, ev); !violations.empty()) {
        throw InvalidAnnouncement(std::move(violations));
    }
    MmaState next = m;
    next.global = combine(m.global, ev.payload, SetOp::union_);
    next.pub = combine(m.pub, ev.payload, SetOp::union_);
    for (auto& [e, fa] : next.aware) fa = combine(fa, ev.payload, SetOp::union_);
    for (auto& [key, w] : next.omega) w = combine(w, ev.payload, SetOp::union_);
    for (auto& [e, fe] : next.scope) fe = induced_scope(next.global, fe.args());
    return Transition{m, ev, std::move(next)};
}

ExtensionSet restrict_extensions(const ExtensionSet& g, const ArgSet& keep) {
    ExtensionSet out;
    for (const auto& x : g) out.insert(set_intersection(x, keep));
    return out;
}

DetectionDetail detect_after(const MmaState& after, const AgentId& viewer, const AgentId& subject,
                             const Frame& payload) {
    DetectionDetail d;
    d.checked = set_intersection(payload.args(), after.scope_of(subject).args());
    d.source = restrict_extensions(trust_neutral_public_semantics(after, viewer, subject), d.checked);
    d.target = restrict_extensions(trust_neutral_local_semantics(after, viewer, subject), d.checked);
    if (d.checked.empty()) {
        d.verdict = DetectionVerdict::undetermined;
        return d;
    }
    const bool overlap = std::any_of(d.source.begin(), d.source.end(),
                                     [&](const ArgSet& x) { return d.target.count(x) != 0; });
    if (!overlap) {
        d.verdict = DetectionVerdict::dishonest;
        return d;
    }
    const ArgSet& facts = after.factual_for(viewer, subject);
    if (d.source == d.target && is_subset(d.checked, facts)) {
        d.verdict = DetectionVerdict::honest;
    }
    return d;
}

DetectionVerdict detect(const MmaState& m, const AgentId& viewer, const AgentId& subject,
                        const AnnouncementEvent& ev) {
    if (!m.agents.count(viewer) || !m.agents.count(subject)) {
        throw DomainError("detect: unknown agent");
    }
    const Transition t = announce(m, ev);
    return detect_after(t.after, viewer, subject, ev.payload).verdict;
}

DetectionMatrix detection_matrix(const Transition& t, Execution exec) {
    std::vector<AgentPair> pairs;
    for (const auto& v : t.after.agents) {
        for (const auto& s : t.after.agents) {
            if (v != s) pairs.emplace_back(v, s);
        }
    }
    std::vector<DetectionDetail> details(pairs.size());
    std::exception_ptr failure;
    const long count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long i = 0; i < count; ++i) {
        try {
            const auto& [v, s] = pairs[static_cast<std::size_t>(i)];
            details[static_cast<std::size_t>(i)] = detect_after(t.after, v, s, t.event.payload);
        } catch (...) {
#pragma omp critical(mma_verdict_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    DetectionMatrix out;
    for (std::size_t i = 0; i < pairs.size(); ++i) out.emplace(pairs[i], std::move(details[i]));
    return out;
}

VerdictMatrix verdict_matrix(const Transition& t, Execution exec) {
    VerdictMatrix out;
    for (const auto& [key, d] : detection_matrix(t, exec)) out.emplace(key, d.verdict);
    return out;
}

MmaState apply_verdicts(const MmaState& after, const VerdictMatrix& verdicts, const TrustPolicy& policy) {
    MmaState next = after;
    for (const auto& [key, verdict] : verdicts) {
        auto it = next.trust.find(key);
        if (it == next.trust.end()) continue;
        Trust value = it->second;
        if (verdict == DetectionVerdict::honest) value += policy.delta_honest;
        if (verdict == DetectionVerdict::dishonest) value -= policy.delta_dishonest;
        it->second = std::clamp(value, -next.trust_bound, next.trust_bound);
    }
    return next;
}

MmaState revise(const MmaState& before, const AnnouncementEvent& ev, const MmaState& after,
                const TrustPolicy& policy) {
    return apply_verdicts(after, verdict_matrix(Transition{before, ev, after}), policy);
}

MmaState update(const MmaState& m, const AnnouncementEvent& ev, const TrustPolicy& policy) {
    Transition t = announce(m, ev);
    return revise(t.before, t.event, t.after, policy);
}

} // namespace mma
