// Acceptance checks for the end-game reproduction. Prints one PASS/FAIL line
// per criterion and exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "mma/oracle.hpp"
#include "mma/scenario.hpp"
#include "support/generators.hpp"

using namespace mma;
using mma::testing::args;
using mma::testing::attacks;
using mma::testing::extensions;
using mma::testing::fixture;
using mma::testing::replay;

namespace {

// Collects the reasons a criterion failed.
struct Check {
    std::vector<std::string> problems;

    template <typename T>
    void equal(const std::string& what, const T& got, const T& want, std::string (*show)(const T&)) {
        if (!(got == want)) problems.push_back(what + ": got " + show(got) + ", expected " + show(want));
    }
    void that(const std::string& what, bool ok) {
        if (!ok) problems.push_back(what);
    }
};

std::string show_ext(const ExtensionSet& g) {
    return format_extensions(g);
}
std::string show_attacks(const AttackSet& r) {
    return format_attacks(r);
}
std::string show_frame(const Frame& f) {
    return format_set(f.args()) + " " + format_attacks(f.attacks());
}
std::string show_verdict(const DetectionVerdict& v) {
    return to_string(v);
}
std::string show_trust(const Trust& t) {
    return std::to_string(t);
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && elapsed >= limit_s) {
        c.problems.push_back("took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_s) + " s");
    }
    const bool ok = c.problems.empty();
    if (!ok) ++failures;
    std::printf("[%s] %d %s (%.3f s)\n", ok ? "PASS" : "FAIL", id, title.c_str(), elapsed);
    for (const auto& p : c.problems) std::printf("       %s\n", p.c_str());
    std::fflush(stdout);
}

std::map<AgentPair, Trust> trust_delta(const MmaState& before, const MmaState& after) {
    std::map<AgentPair, Trust> out;
    for (const auto& [key, t] : after.trust) out[key] = t - before.trust.at(key);
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main() {
    criterion(1, "worked-example semantics", 1.0, [](Check& c) {
        const MmaState d = replay(fixture("mafia_endgame.json"), 3);
        c.equal("public semantics of e2 for e1 at D", trust_neutral_public_semantics(d, "e2", "e1"),
                extensions({{"a2", "a3", "a9"}}), show_ext);
        c.equal("local semantics of e2 for e1 at D", trust_neutral_local_semantics(d, "e2", "e1"),
                extensions({{"a1", "a4", "a5"}}), show_ext);
        const MmaState low = replay(fixture("mafia_trust_e1_below_e2.json"), 4);
        const MmaState high = replay(fixture("mafia_trust_e2_below_e1.json"), 4);
        c.that("trust ordering fixture e1 < e2", low.trust_in("e3", "e1") < low.trust_in("e3", "e2"));
        c.that("trust ordering fixture e2 < e1", high.trust_in("e3", "e2") < high.trust_in("e3", "e1"));
        c.equal("trust-adjusted semantics of e3 at E, e1 trusted less", trust_adjusted_public_semantics(low, "e3"),
                extensions({{"a4", "a5"}}), show_ext);
        c.equal("trust-adjusted semantics of e3 at E, e2 trusted less", trust_adjusted_public_semantics(high, "e3"),
                extensions({{"a2", "a3", "a9"}}), show_ext);
    });

    criterion(2, "detection verdicts", 0, [](Check& c) {
        const Scenario main = fixture("mafia_endgame.json");
        const Transition cd = announce(replay(main, 2), main.script[2].event);
        const DetectionMatrix m1 = detection_matrix(cd);
        const DetectionDetail& d = m1.at({"e2", "e1"});
        c.equal("C->D verdict (e2,e1)", d.verdict, DetectionVerdict::dishonest, show_verdict);
        c.equal("C->D source", d.source, extensions({{"a2", "a3"}}), show_ext);
        c.equal("C->D target", d.target, extensions({{}}), show_ext);

        const Scenario honest = fixture("mafia_honest_variant.json");
        const Transition cd2 = announce(replay(honest, 2), honest.script[2].event);
        const DetectionMatrix m2 = detection_matrix(cd2);
        c.equal("C->D' verdict (e2,e1)", m2.at({"e2", "e1"}).verdict, DetectionVerdict::honest, show_verdict);
        c.equal("C->D' verdict (e3,e1)", m2.at({"e3", "e1"}).verdict, DetectionVerdict::undetermined, show_verdict);
    });

    criterion(3, "preference adjustment", 0, [](Check& c) {
        const MmaState e = replay(fixture("mafia_endgame.json"), 4);
        c.equal("E1'", adjusted_perceived(e, "e1", "e1").attacks(),
                attacks({{"a1", "a2"}, {"a1", "a3"}, {"a3", "a4"}, {"a3", "a5"}, {"a4", "a9"}, {"a5", "a2"}, {"a5", "a3"}}),
                show_attacks);
        c.equal("E2'", adjusted_perceived(e, "e2", "e2").attacks(),
                attacks({{"a1", "a2"}, {"a1", "a3"}, {"a4", "a3"}, {"a5", "a3"}, {"a4", "a9"}, {"a5", "a2"}}),
                show_attacks);
        c.equal("E3' = E3", adjusted_perceived(e, "e3", "e3"), e.aware_of("e3"), show_frame);
        c.that("(a3,a1) present before adjustment", e.aware_of("e1").attacks(ArgumentId("a3"), ArgumentId("a1")));
        c.that("(a3,a1) removed in E1'", !adjusted_perceived(e, "e1", "e1").attacks(ArgumentId("a3"), ArgumentId("a1")));
    });

    criterion(4, "announcement validity", 0, [](Check& c) {
        const MmaState d = replay(fixture("mafia_endgame.json"), 3);
        const AnnouncementEvent ev{Frame(args({"a5"}), attacks({{"a5", "a2"}, {"a5", "a3"}})), {"e2"}};
        const auto violations = check_announcement(d, ev);
        c.that("payload rejected: " + format_violations(violations), violations.empty());
        if (!violations.empty()) return;
        c.equal("public frame at E", announce(d, ev).after.pub,
                Frame(args({"a2", "a3", "a4", "a5", "a9"}),
                      attacks({{"a3", "a4"}, {"a3", "a5"}, {"a4", "a9"}, {"a5", "a2"}, {"a5", "a3"}})),
                show_frame);
    });

    criterion(5, "oracle equivalence", 60.0, [](Check& c) {
        std::size_t frames = 0;
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto rep = oracle::exhaustive_check(n);
            frames += rep.frames;
            c.that("exhaustive n=" + std::to_string(n) + ": " + std::to_string(rep.mismatches) + " mismatches",
                   rep.mismatches == 0);
        }
        const auto rep = oracle::cross_check(10, 20190601, 250);
        frames += rep.frames;
        c.that("random frames: " + std::to_string(rep.mismatches) + " mismatches", rep.mismatches == 0);
        for (std::size_t i = 0; i < rep.details.size() && i < 3; ++i) c.problems.push_back(rep.details[i]);
        std::printf("       %zu frames compared\n", frames);
    });

    criterion(6, "theorem suites", 0, [](Check& c) {
        std::vector<MmaState> corpus;
        for (const char* name : {"mafia_endgame.json", "mafia_honest_variant.json", "mafia_trust_e1_below_e2.json",
                                 "mafia_trust_e2_below_e1.json"}) {
            const Scenario sc = fixture(name);
            for (std::size_t k = 0; k <= sc.script.size(); ++k) corpus.push_back(replay(sc, k));
        }
        std::mt19937_64 rng(6);
        for (int i = 0; i < 200; ++i) corpus.push_back(mma::testing::random_state(rng));

        std::size_t scope_checks = 0, preservation = 0, updates = 0, frames = 0;
        for (const auto& m : corpus) {
            c.that("corpus state fails validation", validate(m).empty());
            for (const auto& e : m.agents) {
                const ArgSet& own = m.scope_of(e).args();
                AttackSet seen;
                for (const auto* r : {&m.aware_of(e).attacks(), &m.global.attacks()}) {
                    for (const auto& at : *r) {
                        if (own.count(at.from) && own.count(at.to)) seen.insert(at);
                    }
                }
                c.that("scope of " + e.str() + " not faithfully reflected", seen == m.scope_of(e).attacks());
                ++scope_checks;

                if (const auto ev = mma::testing::random_announcement(m, rng, own)) {
                    c.that("scope of " + e.str() + " changed by an announcement avoiding it",
                           announce(m, *ev).after.scope_of(e) == m.scope_of(e));
                    ++preservation;
                }
            }
            if (const auto ev = mma::testing::random_announcement(m, rng)) {
                const MmaState next = update(m, *ev, TrustPolicy{});
                c.that("update left the state unchanged", next != m && next.pub != m.pub);
                ++updates;
            }
            for (const auto& e : m.agents) {
                for (const Frame& f : {m.aware_of(e), public_model(m, e, e), adjusted_perceived(m, e, e)}) {
                    const ExtensionSet gr = grounded_set(f);
                    ArgSet meet = f.args();
                    for (const auto& s : complete_sets(f)) meet = set_intersection(meet, s);
                    c.that("grounded not unique", gr.size() == 1);
                    c.that("grounded differs from meet of complete sets", gr == ExtensionSet{meet});
                    ++frames;
                }
            }
        }
        // Every valid announcement of the bundled scripts.
        for (const char* name : {"mafia_endgame.json", "mafia_honest_variant.json"}) {
            const Scenario sc = fixture(name);
            MmaState m = sc.initial;
            for (const auto& step : sc.script) {
                const MmaState next = update(m, step.event, sc.policy);
                c.that("script update left the state unchanged", next != m);
                m = next;
                ++updates;
            }
        }
        c.that("fewer than 100 preservation pairs", preservation >= 100);
        std::printf("       %zu scope checks, %zu preservation pairs, %zu updates, %zu grounded frames\n", scope_checks,
                    preservation, updates, frames);
    });

    criterion(7, "trust revision against independent detection", 0, [](Check& c) {
        const TrustPolicy policy{1, 1};
        auto replay_checked = [&](const Scenario& sc, const std::string& label) {
            MmaState m = sc.initial;
            std::vector<std::map<AgentPair, Trust>> deltas;
            for (std::size_t i = 0; i < sc.script.size(); ++i) {
                const AnnouncementEvent& ev = sc.script[i].event;
                const MmaState next = update(m, ev, policy);
                std::map<AgentPair, Trust> want;
                for (const auto& v : m.agents) {
                    for (const auto& s : m.agents) {
                        Trust delta = 0;
                        if (v != s) {
                            const DetectionVerdict r = mma::testing::reference_verdict(m, ev, v, s);
                            delta = r == DetectionVerdict::honest ? policy.delta_honest
                                  : r == DetectionVerdict::dishonest ? -policy.delta_dishonest : 0;
                        }
                        want[{v, s}] = delta;
                    }
                }
                const auto got = trust_delta(m, next);
                for (const auto& [key, d] : want) {
                    c.equal(label + " step " + std::to_string(i + 1) + " delta (" + key.first.str() + "," +
                                key.second.str() + ")",
                            got.at(key), d, show_trust);
                }
                deltas.push_back(got);
                m = next;
            }
            return deltas;
        };
        const auto main = replay_checked(fixture("mafia_endgame.json"), "main");
        const auto honest = replay_checked(fixture("mafia_honest_variant.json"), "honest variant");
        c.equal("C->D delta (e2,e1)", main.at(2).at({"e2", "e1"}), Trust{-1}, show_trust);
        c.equal("C->D' delta (e2,e1)", honest.at(2).at({"e2", "e1"}), Trust{1}, show_trust);
        std::size_t moved = 0;
        for (const auto* run : {&main, &honest}) {
            for (const auto& step : *run) {
                for (const auto& [key, d] : step) moved += d != 0;
            }
        }
        c.that("only the two detected pairs change trust (" + std::to_string(moved) + " changes)", moved == 2);
    });

    criterion(8, "deterministic traces", 0, [](Check& c) {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "mma_acceptance";
        fs::create_directories(dir);
        const std::string scenario = std::string(MMA_DATA_DIR) + "/mafia_endgame.json";
        std::vector<std::string> traces;
        for (const char* name : {"first.json", "second.json"}) {
            const fs::path out = dir / name;
            fs::remove(out);
            const std::string cmd = std::string(MMA_CLI_PATH) + " run " + scenario + " --with-semantics --trace " +
                                    out.string() + " > /dev/null";
            c.that("run exited nonzero", std::system(cmd.c_str()) == 0);
            traces.push_back(slurp(out));
        }
        c.that("trace is empty", !traces[0].empty());
        c.that("traces differ", traces[0] == traces[1]);
    });

    std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria failed");
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
