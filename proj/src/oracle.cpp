#include "mma/oracle.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <vector>

namespace mma::oracle {

namespace {

// Literal definitions over explicit argument sets.

bool conflict_free(const ArgSet& s, const Frame& f) {
    for (const auto& a : s) {
        for (const auto& b : s) {
            if (f.attacks(a, b)) return false;
        }
    }
    return true;
}

bool defended_by(const ArgSet& s, const ArgumentId& x, const Frame& f) {
    for (const auto& y : f.args()) {
        if (!f.attacks(y, x)) continue;
        bool countered = false;
        for (const auto& z : s) {
            if (f.attacks(z, y)) {
                countered = true;
                break;
            }
        }
        if (!countered) return false;
    }
    return true;
}

bool admissible(const ArgSet& s, const Frame& f) {
    if (!conflict_free(s, f)) return false;
    for (const auto& x : s) {
        if (!defended_by(s, x, f)) return false;
    }
    return true;
}

bool complete(const ArgSet& s, const Frame& f) {
    if (!admissible(s, f)) return false;
    for (const auto& x : f.args()) {
        if (defended_by(s, x, f) && !s.count(x)) return false;
    }
    return true;
}

std::vector<ArgSet> all_complete(const Frame& f) {
    const std::vector<ArgumentId> names(f.args().begin(), f.args().end());
    const std::uint64_t count = std::uint64_t{1} << names.size();
    std::vector<ArgSet> found;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        ArgSet s;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (mask & (std::uint64_t{1} << i)) s.insert(names[i]);
        }
        if (complete(s, f)) found.push_back(std::move(s));
    }
    return found;
}

bool strict_subset(const ArgSet& a, const ArgSet& b) {
    if (a.size() >= b.size()) return false;
    for (const auto& x : a) {
        if (!b.count(x)) return false;
    }
    return true;
}

} // namespace

ExtensionSet oracle_semantics(SemanticsKind kind, const Frame& f) {
    if (!f.is_dung()) throw DomainError("oracle_semantics requires a Dung frame");
    if (f.args().size() > max_args) {
        throw GuardError("oracle limited to " + std::to_string(max_args) + " arguments, got " +
                         std::to_string(f.args().size()));
    }
    const std::vector<ArgSet> co = all_complete(f);
    ExtensionSet out;
    switch (kind) {
    case SemanticsKind::complete:
        out.insert(co.begin(), co.end());
        break;
    case SemanticsKind::preferred:
        for (const auto& s : co) {
            const bool maximal = std::none_of(co.begin(), co.end(),
                                              [&](const ArgSet& t) { return strict_subset(s, t); });
            if (maximal) out.insert(s);
        }
        break;
    case SemanticsKind::grounded: {
        ArgSet meet = f.args();
        for (const auto& s : co) {
            ArgSet keep;
            for (const auto& x : meet) {
                if (s.count(x)) keep.insert(x);
            }
            meet = std::move(keep);
        }
        out.insert(std::move(meet));
        break;
    }
    }
    return out;
}

Frame random_frame(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution edge(density);
    ArgSet args;
    std::vector<ArgumentId> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.emplace_back("a" + std::to_string(i));
        args.insert(names.back());
    }
    AttackSet attacks;
    for (const auto& from : names) {
        for (const auto& to : names) {
            if (edge(rng)) attacks.insert({from, to});
        }
    }
    return Frame(std::move(args), std::move(attacks));
}

namespace {

constexpr std::array<SemanticsKind, 3> all_kinds{SemanticsKind::complete, SemanticsKind::preferred,
                                                 SemanticsKind::grounded};

std::vector<std::string> compare(const Frame& f) {
    std::vector<std::string> out;
    for (SemanticsKind kind : all_kinds) {
        for (Execution exec : {Execution::serial, Execution::parallel}) {
            const ExtensionSet got = semantics(kind, f, exec);
            const ExtensionSet want = oracle_semantics(kind, f);
            if (got != want) {
                out.push_back(std::string(to_string(kind)) + " on args " + format_set(f.args()) +
                              " attacks " + format_attacks(f.attacks()) + ": solver " +
                              format_extensions(got) + " vs oracle " + format_extensions(want));
            }
        }
    }
    return out;
}

} // namespace

CrossCheckReport cross_check(std::size_t max_n, std::uint64_t seed, std::size_t trials) {
    if (max_n > max_args) {
        throw GuardError("cross_check max_n exceeds oracle limit of " + std::to_string(max_args));
    }
    // Frames are drawn serially so the sample depends only on the seed.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(0, max_n);
    std::uniform_int_distribution<int> density_dist(1, 5);
    std::vector<Frame> frames;
    frames.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = size_dist(rng);
        const double density = density_dist(rng) / 10.0;
        frames.push_back(random_frame(n, density, rng));
    }

    std::vector<std::vector<std::string>> per_frame(frames.size());
    const long count = static_cast<long>(frames.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        per_frame[static_cast<std::size_t>(i)] = compare(frames[static_cast<std::size_t>(i)]);
    }

    CrossCheckReport report;
    report.frames = frames.size();
    for (auto& d : per_frame) {
        if (!d.empty()) ++report.mismatches;
        std::move(d.begin(), d.end(), std::back_inserter(report.details));
    }
    return report;
}

CrossCheckReport exhaustive_check(std::size_t n) {
    if (n > 4) throw GuardError("exhaustive_check is limited to 4 arguments");
    std::vector<ArgumentId> names;
    ArgSet args;
    for (std::size_t i = 1; i <= n; ++i) {
        names.emplace_back("a" + std::to_string(i));
        args.insert(names.back());
    }
    const std::size_t pairs = n * n;
    const long total = static_cast<long>(std::uint64_t{1} << pairs);
    std::vector<std::vector<std::string>> per_frame(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
    for (long mask = 0; mask < total; ++mask) {
        AttackSet attacks;
        for (std::size_t p = 0; p < pairs; ++p) {
            if (static_cast<std::uint64_t>(mask) & (std::uint64_t{1} << p)) {
                attacks.insert({names[p / n], names[p % n]});
            }
        }
        per_frame[static_cast<std::size_t>(mask)] = compare(Frame(args, std::move(attacks)));
    }
    CrossCheckReport report;
    report.frames = per_frame.size();
    for (auto& d : per_frame) {
        if (!d.empty()) ++report.mismatches;
        std::move(d.begin(), d.end(), std::back_inserter(report.details));
    }
    return report;
}

} // namespace mma::oracle
