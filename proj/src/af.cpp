#include "mma/af.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mma {

ArgumentId::ArgumentId(std::string id) : id_(std::move(id)) {
    if (id_.empty()) {
        throw DomainError("argument id must be nonempty");
    }
}

const char* to_string(SemanticsKind kind) noexcept {
    switch (kind) {
    case SemanticsKind::complete: return "complete";
    case SemanticsKind::preferred: return "preferred";
    case SemanticsKind::grounded: return "grounded";
    }
    return "?";
}

SemanticsKind parse_semantics_kind(const std::string& text) {
    if (text == "complete") return SemanticsKind::complete;
    if (text == "preferred") return SemanticsKind::preferred;
    if (text == "grounded") return SemanticsKind::grounded;
    throw DomainError("unknown semantics kind '" + text + "'");
}

Frame::Frame(ArgSet args, AttackSet attacks) : args_(std::move(args)), attacks_(std::move(attacks)) {
    for (const auto& [from, to] : attacks_) {
        const bool has_from = contains(from);
        const bool has_to = contains(to);
        if (!has_from && !has_to) {
            throw DomainError("attack (" + from.str() + "," + to.str() +
                              ") has no endpoint among the frame's arguments");
        }
        if (!has_from || !has_to) {
            kind_ = FrameKind::pre_dung;
        }
    }
}

bool Frame::is_subframe_of(const Frame& other) const {
    return std::includes(other.args_.begin(), other.args_.end(), args_.begin(), args_.end()) &&
           std::includes(other.attacks_.begin(), other.attacks_.end(), attacks_.begin(),
                         attacks_.end());
}

namespace {

void require_dung(const Frame& f, const char* op) {
    if (!f.is_dung()) {
        throw DomainError(std::string(op) + " requires a Dung frame");
    }
}

void require_members(const ArgSet& s, const Frame& f) {
    for (const auto& a : s) {
        if (!f.contains(a)) {
            throw DomainError("argument '" + a.str() + "' is not in the frame");
        }
    }
}

// Index-based view of a Dung frame used by the solver.
struct IndexedFrame {
    std::vector<ArgumentId> names;
    std::vector<std::vector<int>> attackers;
    std::vector<std::vector<int>> attacked;

    explicit IndexedFrame(const Frame& f) : names(f.args().begin(), f.args().end()) {
        std::map<ArgumentId, int> index;
        for (int i = 0; i < static_cast<int>(names.size()); ++i) {
            index.emplace(names[i], i);
        }
        attackers.resize(names.size());
        attacked.resize(names.size());
        for (const auto& [from, to] : f.attacks()) {
            const int u = index.at(from);
            const int v = index.at(to);
            attackers[v].push_back(u);
            attacked[u].push_back(v);
        }
    }

    int size() const { return static_cast<int>(names.size()); }
};

enum Label : std::int8_t { unset = 0, in, out, undec };

using Labelling = std::vector<Label>;

// Complete labellings: IN iff every attacker is OUT, OUT iff some attacker is
// IN, UNDEC otherwise. Propagation returns false on contradiction; on a fully
// assigned labelling a successful pass certifies completeness.
bool propagate(const IndexedFrame& g, Labelling& lab) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < g.size(); ++a) {
            int n_in = 0, n_out = 0, n_undec = 0, n_unset = 0, last_unset = -1;
            for (int b : g.attackers[a]) {
                switch (lab[b]) {
                case in: ++n_in; break;
                case out: ++n_out; break;
                case undec: ++n_undec; break;
                case unset: ++n_unset; last_unset = b; break;
                }
            }
            const int deg = static_cast<int>(g.attackers[a].size());
            switch (lab[a]) {
            case unset:
                if (n_in > 0) {
                    lab[a] = out;
                    changed = true;
                } else if (n_out == deg) {
                    lab[a] = in;
                    changed = true;
                }
                break;
            case in:
                if (n_in > 0 || n_undec > 0) return false;
                if (n_unset > 0) {
                    for (int b : g.attackers[a]) {
                        if (lab[b] == unset) lab[b] = out;
                    }
                    changed = true;
                }
                break;
            case out:
                if (n_in == 0 && n_unset == 0) return false;
                if (n_in == 0 && n_unset == 1) {
                    lab[last_unset] = in;
                    changed = true;
                }
                break;
            case undec:
                if (n_in > 0 || n_out == deg) return false;
                break;
            }
        }
    }
    return true;
}

ArgSet in_set(const IndexedFrame& g, const Labelling& lab) {
    ArgSet s;
    for (int a = 0; a < g.size(); ++a) {
        if (lab[a] == in) s.insert(g.names[a]);
    }
    return s;
}

int pick_branch(const IndexedFrame& g, const Labelling& lab) {
    int best = -1;
    std::size_t best_degree = 0;
    for (int a = 0; a < g.size(); ++a) {
        if (lab[a] != unset) continue;
        const std::size_t degree = g.attackers[a].size() + g.attacked[a].size();
        if (best < 0 || degree > best_degree) {
            best = a;
            best_degree = degree;
        }
    }
    return best;
}

constexpr int task_depth = 4;

void search(const IndexedFrame& g, Labelling lab, int depth, bool spawn, ExtensionSet& out_sets) {
    if (!propagate(g, lab)) return;
    const int a = pick_branch(g, lab);
    if (a < 0) {
        ArgSet s = in_set(g, lab);
        if (spawn) {
#pragma omp critical(mma_complete_merge)
            out_sets.insert(std::move(s));
        } else {
            out_sets.insert(std::move(s));
        }
        return;
    }
    for (Label choice : {in, out, undec}) {
        Labelling next = lab;
        next[a] = choice;
        if (spawn && depth < task_depth) {
#pragma omp task default(none) firstprivate(next, depth) shared(g, out_sets)
            search(g, std::move(next), depth + 1, true, out_sets);
        } else {
            search(g, std::move(next), depth + 1, spawn, out_sets);
        }
    }
}

} // namespace

bool is_conflict_free(const ArgSet& s, const Frame& f) {
    require_dung(f, "is_conflict_free");
    require_members(s, f);
    return std::none_of(f.attacks().begin(), f.attacks().end(), [&](const Attack& r) {
        return s.count(r.from) && s.count(r.to);
    });
}

bool defends(const ArgSet& s, const ArgumentId& a, const Frame& f) {
    require_dung(f, "defends");
    require_members(s, f);
    require_members({a}, f);
    for (const auto& [attacker, target] : f.attacks()) {
        if (target != a) continue;
        const bool countered = std::any_of(s.begin(), s.end(), [&, &attacker = attacker](const ArgumentId& d) {
            return f.attacks(d, attacker);
        });
        if (!countered) return false;
    }
    return true;
}

ExtensionSet complete_sets(const Frame& f, Execution exec) {
    require_dung(f, "complete_sets");
    const IndexedFrame g(f);
    ExtensionSet result;
    Labelling start(g.names.size(), unset);
#ifdef _OPENMP
    if (exec == Execution::parallel && g.size() > 8) {
#pragma omp parallel default(none) shared(g, start, result)
#pragma omp single
        search(g, start, 0, true, result);
        return result;
    }
#endif
    (void)exec;
    search(g, std::move(start), 0, false, result);
    return result;
}

ExtensionSet preferred_sets(const Frame& f, Execution exec) {
    const ExtensionSet complete = complete_sets(f, exec);
    ExtensionSet result;
    for (const auto& candidate : complete) {
        const bool dominated = std::any_of(complete.begin(), complete.end(), [&](const ArgSet& other) {
            return other.size() > candidate.size() && is_subset(candidate, other);
        });
        if (!dominated) result.insert(candidate);
    }
    return result;
}

ExtensionSet grounded_set(const Frame& f) {
    require_dung(f, "grounded_set");
    const IndexedFrame g(f);
    std::vector<char> member(g.names.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<char> hit(g.names.size(), 0);
        for (int a = 0; a < g.size(); ++a) {
            if (!member[a]) continue;
            for (int b : g.attacked[a]) hit[b] = 1;
        }
        for (int a = 0; a < g.size(); ++a) {
            if (member[a]) continue;
            const bool defended = std::all_of(g.attackers[a].begin(), g.attackers[a].end(),
                                              [&](int b) { return hit[b] != 0; });
            if (defended) {
                member[a] = 1;
                changed = true;
            }
        }
    }
    ArgSet s;
    for (int a = 0; a < g.size(); ++a) {
        if (member[a]) s.insert(g.names[a]);
    }
    return ExtensionSet{std::move(s)};
}

ExtensionSet semantics(SemanticsKind kind, const Frame& f, Execution exec) {
    switch (kind) {
    case SemanticsKind::complete: return complete_sets(f, exec);
    case SemanticsKind::preferred: return preferred_sets(f, exec);
    case SemanticsKind::grounded: return grounded_set(f);
    }
    throw DomainError("unknown semantics kind");
}

bool acceptance(const ArgumentId& a, SemanticsKind kind, const Frame& f, Acceptance mode) {
    require_members({a}, f);
    const ExtensionSet g = semantics(kind, f);
    auto holds = [&](const ArgSet& ext) { return ext.count(a) != 0; };
    return mode == Acceptance::credulous ? std::any_of(g.begin(), g.end(), holds)
                                         : std::all_of(g.begin(), g.end(), holds);
}

Frame restrict(const Frame& f, const ArgSet& keep) {
    ArgSet args = set_intersection(f.args(), keep);
    AttackSet attacks;
    for (const auto& r : f.attacks()) {
        if (args.count(r.from) && args.count(r.to)) attacks.insert(r);
    }
    return Frame(std::move(args), std::move(attacks));
}

Frame combine(const Frame& f1, const Frame& f2, SetOp op) {
    ArgSet args = op == SetOp::union_ ? set_union(f1.args(), f2.args())
                                      : set_intersection(f1.args(), f2.args());
    AttackSet merged;
    if (op == SetOp::union_) {
        std::set_union(f1.attacks().begin(), f1.attacks().end(), f2.attacks().begin(),
                       f2.attacks().end(), std::inserter(merged, merged.end()));
    } else {
        std::set_intersection(f1.attacks().begin(), f1.attacks().end(), f2.attacks().begin(),
                              f2.attacks().end(), std::inserter(merged, merged.end()));
    }
    std::erase_if(merged, [&](const Attack& r) { return !args.count(r.from) || !args.count(r.to); });
    return Frame(std::move(args), std::move(merged));
}

ArgSet set_intersection(const ArgSet& lhs, const ArgSet& rhs) {
    ArgSet out;
    std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                          std::inserter(out, out.end()));
    return out;
}

ArgSet set_union(const ArgSet& lhs, const ArgSet& rhs) {
    ArgSet out = lhs;
    out.insert(rhs.begin(), rhs.end());
    return out;
}

bool is_subset(const ArgSet& sub, const ArgSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

std::string format_set(const ArgSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& a : s) {
        if (!first) os << ',';
        os << a.str();
        first = false;
    }
    os << '}';
    return os.str();
}

std::string format_extensions(const ExtensionSet& g) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& s : g) {
        if (!first) os << ',';
        os << format_set(s);
        first = false;
    }
    os << '}';
    return os.str();
}

std::string format_attacks(const AttackSet& r) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [from, to] : r) {
        if (!first) os << ',';
        os << '(' << from.str() << ',' << to.str() << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace mma
