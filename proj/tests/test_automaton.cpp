#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bosy/spec.hpp"
#include "bosy/translate.hpp"
#include "oracles.hpp"

using namespace bosy;

namespace {

UniversalCoBuchi two_state_chain(const PropPtr& loop_label) {
    UniversalCoBuchi a;
    a.num_states = 2;
    a.initial = 0;
    a.atoms = {"g"};
    a.rejecting = {0, 1};
    a.safety = {0, 0};
    a.edges.push_back({0, Prop::constant(true), 1});
    a.edges.push_back({1, loop_label, 1});
    return a;
}

}  // namespace

TEST_CASE("a rejecting sink with a true self-loop is demoted") {
    // UCW of G ((!g_0) || (!g_1)): the negation F (g_0 && g_1) has a rejecting
    // sink that loops unconditionally once the violation happened
    SynthesisProblem p;
    p.outputs = {"g_0", "g_1"};
    p.guarantees = {parse_ltl("G ((!g_0) || (!g_1))")};
    UniversalCoBuchi a = build_ucw(p);
    REQUIRE(a.rejecting_count() > 0);
    a = demote_safety_states(std::move(a));
    CHECK(a.rejecting_count() == 0);
    int demoted = 0;
    for (int q = 0; q < a.num_states; ++q) demoted += a.safety[q];
    CHECK(demoted == 1);
    // the demoted state keeps its incoming edges but none outgoing
    for (const auto& e : a.edges) CHECK_FALSE(a.safety[e.source]);
    bool has_forbidden_entry = false;
    for (const auto& e : a.edges) has_forbidden_entry |= bool(a.safety[e.target]);
    CHECK(has_forbidden_entry);
}

TEST_CASE("a rejecting state with a conditional self-loop stays") {
    UniversalCoBuchi a = two_state_chain(Prop::negate(Prop::atom("g")));
    a.rejecting = {0, 1};
    const UniversalCoBuchi b = demote_safety_states(a);
    CHECK(b.rejecting == a.rejecting);
    CHECK(b.safety == std::vector<char>{0, 0});
}

TEST_CASE("multiple self-loops whose union is a tautology count as a sink") {
    UniversalCoBuchi a;
    a.num_states = 1;
    a.initial = 0;
    a.atoms = {"g"};
    a.rejecting = {1};
    a.safety = {0};
    a.edges.push_back({0, Prop::atom("g"), 0});
    a.edges.push_back({0, Prop::negate(Prop::atom("g")), 0});
    const UniversalCoBuchi b = demote_safety_states(a);
    CHECK(b.safety == std::vector<char>{1});
    CHECK(b.rejecting_count() == 0);
    CHECK(b.edges.empty());
}

TEST_CASE("an automaton without rejecting states is unchanged") {
    UniversalCoBuchi a = two_state_chain(Prop::constant(true));
    a.rejecting = {0, 0};
    const UniversalCoBuchi b = demote_safety_states(a);
    CHECK(b.rejecting == std::vector<char>{0, 0});
    CHECK(b.safety == std::vector<char>{0, 0});
    CHECK(b.edges.size() == 2);
}

TEST_CASE("scc analysis of the two-state chain") {
    UniversalCoBuchi a = two_state_chain(Prop::constant(true));
    a.rejecting = {0, 1};  // only the sink rejects
    const UniversalCoBuchi b = analyze_sccs(a);
    REQUIRE(b.scc.has_value());
    CHECK(b.scc->component[0] != b.scc->component[1]);
    CHECK(b.scc->rejecting_in_component[0] == 0);
    CHECK(b.scc->rejecting_in_component[1] == 1);
}

TEST_CASE("two rejecting states in one component share r = 2") {
    UniversalCoBuchi a;
    a.num_states = 2;
    a.initial = 0;
    a.atoms = {};
    a.rejecting = {1, 1};
    a.safety = {0, 0};
    a.edges.push_back({0, Prop::constant(true), 1});
    a.edges.push_back({1, Prop::constant(true), 0});
    const UniversalCoBuchi b = analyze_sccs(a);
    REQUIRE(b.scc.has_value());
    CHECK(b.scc->component[0] == b.scc->component[1]);
    CHECK(b.scc->rejecting_in_component[0] == 2);
    CHECK(b.scc->rejecting_in_component[1] == 2);
}

TEST_CASE("scc partition equals brute-force mutual reachability") {
    std::mt19937 rng(987654);
    for (int round = 0; round < 200; ++round) {
        UniversalCoBuchi a;
        a.num_states = 1 + int(rng() % 12u);
        a.initial = 0;
        a.safety.assign(a.num_states, 0);
        a.rejecting.assign(a.num_states, 0);
        for (int q = 0; q < a.num_states; ++q) a.rejecting[q] = rng() % 2;
        const int num_edges = int(rng() % 24u);
        for (int e = 0; e < num_edges; ++e)
            a.edges.push_back({int(rng() % std::uint32_t(a.num_states)), Prop::constant(true),
                               int(rng() % std::uint32_t(a.num_states))});

        const UniversalCoBuchi b = analyze_sccs(a);
        REQUIRE(b.scc.has_value());

        // brute-force reachability closure
        std::vector<std::vector<char>> reach(a.num_states,
                                             std::vector<char>(a.num_states, 0));
        for (int q = 0; q < a.num_states; ++q) reach[q][q] = 1;
        for (const auto& e : a.edges) reach[e.source][e.target] = 1;
        for (int k = 0; k < a.num_states; ++k)
            for (int i = 0; i < a.num_states; ++i)
                for (int j = 0; j < a.num_states; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = 1;

        for (int i = 0; i < a.num_states; ++i)
            for (int j = 0; j < a.num_states; ++j) {
                const bool mutual = reach[i][j] && reach[j][i];
                const bool same = b.scc->component[i] == b.scc->component[j];
                REQUIRE(mutual == same);
            }
    }
}
