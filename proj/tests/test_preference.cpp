#include <doctest.h>

#include "mma/epistemic.hpp"
#include "mma/preference.hpp"
#include "support/generators.hpp"

using namespace mma;
using mma::testing::args;
using mma::testing::attacks;
using Pairs = std::set<std::pair<ArgumentId, ArgumentId>>;

TEST_CASE("binary intra order") {
    const PreferenceOrder p = to_order(IntraPreference{args({"a1"}), args({"a1", "a3"})});
    CHECK(p.less("a3", "a1"));
    CHECK_FALSE(p.less("a1", "a3"));

    CHECK(to_order(IntraPreference{{}, args({"a1", "a3"})}).empty());
    CHECK(to_order(IntraPreference{args({"a1", "a3"}), args({"a1", "a3"})}).empty());
    // Factual arguments outside the universe play no part.
    CHECK(to_order(IntraPreference{args({"a9"}), args({"a1"})}).empty());
}

TEST_CASE("strict orders must be asymmetric") {
    CHECK_THROWS_AS(PreferenceOrder(Pairs{{"a", "b"}, {"b", "a"}}), DomainError);
    CHECK_THROWS_AS(PreferenceOrder(Pairs{{"a", "a"}}), DomainError);
}

TEST_CASE("attack from a less preferred argument is reversed") {
    const Frame f(args({"a1", "a2"}), attacks({{"a1", "a2"}}));
    const PreferenceOrder p(Pairs{{"a1", "a2"}});
    CHECK(adjust(f, p) == Frame(args({"a1", "a2"}), attacks({{"a2", "a1"}})));
    CHECK(adjust(f, PreferenceOrder{}) == f);
}

TEST_CASE("mutual attack collapses toward the preferred side") {
    const Frame f(args({"a1", "a3"}), attacks({{"a1", "a3"}, {"a3", "a1"}}));
    const Frame g = adjust(f, to_order(IntraPreference{args({"a1"}), args({"a1", "a3"})}));
    CHECK(g.attacks() == attacks({{"a1", "a3"}}));
}

TEST_CASE("detective's self view after the counter-claims") {
    const Frame e2(args({"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a9"}),
                   attacks({{"a1", "a2"}, {"a1", "a3"}, {"a3", "a1"}, {"a3", "a4"}, {"a3", "a5"}, {"a4", "a9"}}));
    const Frame adjusted = adjust(e2, to_order(IntraPreference{args({"a1", "a4", "a5", "a6", "a7"}), e2.args()}));
    CHECK(adjusted.attacks() == attacks({{"a1", "a2"}, {"a1", "a3"}, {"a4", "a3"}, {"a5", "a3"}, {"a4", "a9"}}));
    CHECK(adjusted.args() == e2.args());
}

TEST_CASE("adjust requires a Dung frame") {
    CHECK_THROWS_AS(adjust(Frame(args({"a5"}), attacks({{"a5", "a2"}})), PreferenceOrder(Pairs{{"a5", "a2"}})),
                    DomainError);
}

namespace {

// e1 and e2 claim conflicting arguments a and b; viewer e3 breaks the tie.
MmaState tie_state(Trust to_e1, Trust to_e2) {
    MmaState m;
    const ArgSet all = args({"a", "b", "c"});
    const AttackSet mutual = attacks({{"a", "b"}, {"b", "a"}});
    m.global = Frame(all, mutual);
    m.pub = Frame(args({"a", "b"}), mutual);
    m.agents = {"e1", "e2", "e3"};
    m.scope = {{"e1", Frame(args({"a"}), {})}, {"e2", Frame(args({"b"}), {})}, {"e3", Frame(args({"c"}), {})}};
    for (const auto& e : m.agents) {
        m.aware[e] = combine(m.pub, m.scope.at(e), SetOp::union_);
        for (const auto& s : m.agents) {
            m.sem_model[{e, s}] = SemanticsKind::preferred;
            m.trust[{e, s}] = 0;
        }
    }
    m.trust[{"e3", "e1"}] = to_e1;
    m.trust[{"e3", "e2"}] = to_e2;
    return m;
}

} // namespace

TEST_CASE("inter preference follows trust") {
    const MmaState low_e1 = tie_state(0, 1);
    REQUIRE(validate(low_e1).empty());
    const InterPreference p = derive_inter(low_e1, "e3");
    CHECK(p.leq == Pairs{{"a", "b"}});
    CHECK(to_order(p).less("a", "b"));
    CHECK(trust_adjusted_public_frame(low_e1, "e3").attacks() == attacks({{"b", "a"}}));

    const InterPreference q = derive_inter(tie_state(1, 0), "e3");
    CHECK(q.leq == Pairs{{"b", "a"}});
}

TEST_CASE("equal trust keeps both directions") {
    const MmaState m = tie_state(2, 2);
    const InterPreference p = derive_inter(m, "e3");
    CHECK(p.leq.size() == 2);
    CHECK(to_order(p).empty());
    CHECK(trust_adjusted_public_frame(m, "e3") == m.pub);
}

TEST_CASE("factual arguments are excluded from the inter preference") {
    MmaState m = tie_state(0, 1);
    m.factual[{"e3", "e3"}] = args({"a"});
    CHECK(derive_inter(m, "e3").leq.empty());
}

TEST_CASE("unknown agent has no inter preference") {
    CHECK_THROWS_AS(derive_inter(tie_state(0, 0), "e9"), DomainError);
}
