#pragma once

// Abstract argumentation frames and exact complete/preferred/grounded
// semantics.

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mma {

/// Raised when an operation receives arguments outside its domain
/// (unknown argument, malformed frame, wrong frame kind).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ArgumentId {
public:
    ArgumentId() = default;
    explicit ArgumentId(std::string id);
    ArgumentId(const char* id) : ArgumentId(std::string(id)) {}

    const std::string& str() const noexcept { return id_; }

    friend auto operator<=>(const ArgumentId&, const ArgumentId&) = default;
    friend bool operator==(const ArgumentId&, const ArgumentId&) = default;

private:
    std::string id_;
};

struct Attack {
    ArgumentId from;
    ArgumentId to;

    friend auto operator<=>(const Attack&, const Attack&) = default;
    friend bool operator==(const Attack&, const Attack&) = default;
};

using ArgSet = std::set<ArgumentId>;
using AttackSet = std::set<Attack>;

/// A set of extensions. std::set keeps members in lexicographic order of
/// their sorted argument ids, which is the canonical output order.
using ExtensionSet = std::set<ArgSet>;

enum class FrameKind { dung, pre_dung };

enum class SemanticsKind { complete, preferred, grounded };

enum class Acceptance { credulous, skeptical };

enum class SetOp { union_, intersection };

/// Execution strategy for the extension search. Both produce identical
/// results; `parallel` splits the labelling search into OpenMP tasks.
enum class Execution { serial, parallel };

const char* to_string(SemanticsKind kind) noexcept;
SemanticsKind parse_semantics_kind(const std::string& text);

/// An argument set with an attack relation. Every attack must have at least
/// one endpoint among the arguments (pre-Dung); the frame is Dung when both
/// endpoints always are. The kind is derived, never stored independently.
class Frame {
public:
    Frame() = default;
    Frame(ArgSet args, AttackSet attacks);

    const ArgSet& args() const noexcept { return args_; }
    const AttackSet& attacks() const noexcept { return attacks_; }
    FrameKind kind() const noexcept { return kind_; }
    bool is_dung() const noexcept { return kind_ == FrameKind::dung; }
    bool empty() const noexcept { return args_.empty() && attacks_.empty(); }

    bool contains(const ArgumentId& a) const { return args_.count(a) != 0; }
    bool attacks(const ArgumentId& from, const ArgumentId& to) const {
        return attacks_.count(Attack{from, to}) != 0;
    }

    /// Sub-frame relation: args and attacks both contained.
    bool is_subframe_of(const Frame& other) const;

    friend bool operator==(const Frame& lhs, const Frame& rhs) {
        return lhs.args_ == rhs.args_ && lhs.attacks_ == rhs.attacks_;
    }

private:
    ArgSet args_;
    AttackSet attacks_;
    FrameKind kind_ = FrameKind::dung;
};

bool is_conflict_free(const ArgSet& s, const Frame& f);
bool defends(const ArgSet& s, const ArgumentId& a, const Frame& f);

ExtensionSet complete_sets(const Frame& f, Execution exec = Execution::parallel);
ExtensionSet preferred_sets(const Frame& f, Execution exec = Execution::parallel);

/// Least fixpoint of the characteristic function; always a single member.
ExtensionSet grounded_set(const Frame& f);

ExtensionSet semantics(SemanticsKind kind, const Frame& f,
                       Execution exec = Execution::parallel);

bool acceptance(const ArgumentId& a, SemanticsKind kind, const Frame& f, Acceptance mode);

/// Args intersected with `keep`, attacks restricted accordingly.
Frame restrict(const Frame& f, const ArgSet& keep);

/// Union or intersection of args and attacks; attacks are then cut down to
/// the resulting argument set, so the result is always Dung.
Frame combine(const Frame& f1, const Frame& f2, SetOp op);

ArgSet set_intersection(const ArgSet& lhs, const ArgSet& rhs);
ArgSet set_union(const ArgSet& lhs, const ArgSet& rhs);
bool is_subset(const ArgSet& sub, const ArgSet& super);

/// "{{a1,a4},{a2}}"-style rendering, used in traces and CLI output.
std::string format_set(const ArgSet& s);
std::string format_extensions(const ExtensionSet& g);
std::string format_attacks(const AttackSet& r);

} // namespace mma

template <>
struct std::hash<mma::ArgumentId> {
    std::size_t operator()(const mma::ArgumentId& a) const noexcept {
        return std::hash<std::string>{}(a.str());
    }
};
