#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bosy/error.hpp"
#include "bosy/hoa.hpp"
#include "bosy/spec.hpp"
#include "bosy/translate.hpp"
#include "oracles.hpp"

using namespace bosy;
using namespace bosy::testing;

TEST_CASE("single state without acceptance marks has an empty rejecting set") {
    const UniversalCoBuchi a = parse_hoa(R"(HOA: v1
States: 1
Start: 0
AP: 0
Acceptance: 1 Inf(0)
--BODY--
State: 0
[t] 0
--END--
)");
    CHECK(a.num_states == 1);
    CHECK(a.rejecting_count() == 0);
    REQUIRE(a.edges.size() == 1);
    CHECK(is_true(a.edges[0].label));
}

TEST_CASE("generalized acceptance is rejected") {
    CHECK_THROWS_WITH_AS(parse_hoa(R"(HOA: v1
States: 1
Start: 0
AP: 0
Acceptance: 2 Inf(0)&Inf(1)
--BODY--
State: 0
--END--
)"),
                         doctest::Contains("unsupported acceptance"), Error);
}

TEST_CASE("parsed automaton for F g matches the built-in translation") {
    // the external tool is fed the negation of G !g, i.e. F g
    const char* hoa = R"(HOA: v1
name: "F g"
States: 2
Start: 0
AP: 1 "g"
acc-name: Buchi
Acceptance: 1 Inf(0)
properties: trans-labels explicit-labels state-acc
--BODY--
State: 0
[!0] 0
[0] 1
State: 1 {0}
[t] 1
--END--
)";
    const UniversalCoBuchi imported = parse_hoa(hoa, std::vector<std::string>{"g"});
    const Nba builtin = ltl_to_nba(nnf(parse_ltl("G !g"), true));

    // language equivalence of the underlying Buchi automata on lasso words
    Nba imported_nba;
    imported_nba.num_states = imported.num_states;
    imported_nba.initial = imported.initial;
    imported_nba.edges = imported.edges;
    imported_nba.accepting = imported.rejecting;
    imported_nba.atoms = imported.atoms;
    for (const Lasso& lasso : all_lassos(1, 4))
        CHECK(nba_accepts(imported_nba, lasso, {"g"}) == nba_accepts(builtin, lasso, {"g"}));
}

TEST_CASE("unsupported features fail loudly") {
    CHECK_THROWS_WITH_AS(parse_hoa("HOA: v1\nStates: 1\nStart: 0\nStart: 0\nAP: 0\n"
                                   "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n--END--\n"),
                         doctest::Contains("multiple initial"), Error);
    CHECK_THROWS_WITH_AS(parse_hoa("HOA: v1\nStates: 2\nStart: 0&1\nAP: 0\n"
                                   "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n--END--\n"),
                         doctest::Contains("alternation"), Error);
    CHECK_THROWS_WITH_AS(parse_hoa("HOA: v1\nStates: 2\nStart: 0\nAP: 0\n"
                                   "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n[t] 0&1\n--END--\n"),
                         doctest::Contains("alternation"), Error);
    CHECK_THROWS_WITH_AS(parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 0\n"
                                   "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n[t] 0 {0}\n--END--\n"),
                         doctest::Contains("transition-based"), Error);
    CHECK_THROWS_WITH_AS(parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"g\"\n"
                                   "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n0\n--END--\n"),
                         doctest::Contains("implicit"), Error);
    CHECK_THROWS_WITH_AS(parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 1 \"x\"\n"
                                   "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n--END--\n",
                                   std::vector<std::string>{"g"}),
                         doctest::Contains("unknown AP"), Error);
    CHECK_THROWS_WITH_AS(parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 0\nAlias: @a t\n"
                                   "Acceptance: 1 Inf(0)\n--BODY--\nState: 0\n--END--\n"),
                         doctest::Contains("alias"), Error);
    CHECK_THROWS_WITH_AS(parse_hoa("HOA: v1\nStates: 1\nStart: 0\nAP: 0\n"
                                   "Acceptance: 1 Inf(0)\n--BODY--\nState: [t] 0\n--END--\n"),
                         doctest::Contains("state-labeled"), Error);
}

TEST_CASE("labels support the boolean operators over AP indices") {
    const UniversalCoBuchi a = parse_hoa(R"(HOA: v1
States: 1
Start: 0
AP: 2 "x" "y"
Acceptance: 1 Inf(0)
--BODY--
State: 0 {0}
[(0 & !1) | (!0 & 1)] 0
--END--
)");
    REQUIRE(a.edges.size() == 1);
    const auto& label = a.edges[0].label;
    const auto value = [&](bool x, bool y) {
        return eval(*label, [&](const std::string& n) { return n == "x" ? x : y; });
    };
    CHECK(value(true, false));
    CHECK(value(false, true));
    CHECK_FALSE(value(true, true));
    CHECK_FALSE(value(false, false));
}

TEST_CASE("print_hoa composed with parse_hoa is the identity") {
    // exercise on the arbiter UCW and a handful of formula automata
    std::vector<UniversalCoBuchi> automata;
    {
        SynthesisProblem p = parse_spec(R"json({
            "semantics": "mealy",
            "inputs":  ["r_0", "r_1"],
            "outputs": ["g_0", "g_1"],
            "assumptions": [],
            "guarantees": ["G ((!g_0) || (!g_1))", "G (r_0 -> (F g_0))", "G (r_1 -> (F g_1))"]
        })json");
        automata.push_back(build_ucw(p));
    }
    for (const char* formula : {"F g", "G (a -> F g)", "a U g", "X X g"}) {
        SynthesisProblem p;
        p.inputs = {"a"};
        p.outputs = {"g"};
        p.guarantees = {parse_ltl(formula)};
        automata.push_back(build_ucw(p));
    }

    for (const auto& original : automata) {
        const UniversalCoBuchi reparsed = parse_hoa(print_hoa(original), original.atoms);
        REQUIRE(reparsed.num_states == original.num_states);
        CHECK(reparsed.initial == original.initial);
        CHECK(reparsed.rejecting == original.rejecting);
        // per-state, per-letter successor sets must agree
        const auto original_edges = original.edges_by_source();
        const auto reparsed_edges = reparsed.edges_by_source();
        const std::uint32_t letters = 1u << original.atoms.size();
        for (int q = 0; q < original.num_states; ++q) {
            for (std::uint32_t letter = 0; letter < letters; ++letter) {
                const auto successors = [&](const UniversalCoBuchi& a,
                                            const std::vector<int>& edge_ids) {
                    std::set<int> out;
                    for (int e : edge_ids) {
                        const bool enabled =
                            eval(*a.edges[e].label, [&](const std::string& name) {
                                for (std::size_t k = 0; k < a.atoms.size(); ++k)
                                    if (a.atoms[k] == name) return ((letter >> k) & 1u) != 0;
                                return false;
                            });
                        if (enabled) out.insert(a.edges[e].target);
                    }
                    return out;
                };
                CHECK(successors(original, original_edges[q]) ==
                      successors(reparsed, reparsed_edges[q]));
            }
        }
    }
}
