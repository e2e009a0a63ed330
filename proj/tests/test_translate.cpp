#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bosy/spec.hpp"
#include "bosy/translate.hpp"
#include "oracles.hpp"

using namespace bosy;
using namespace bosy::testing;

TEST_CASE("NBA for F g accepts exactly the words with a g position") {
    const Nba nba = ltl_to_nba(nnf(parse_ltl("F g")));
    const std::vector<std::string> signals{"g"};
    CHECK_FALSE(nba_accepts(nba, Lasso{{}, {0}}, signals));        // (empty)^w
    CHECK(nba_accepts(nba, Lasso{{0}, {1}}, signals));             // g from position 1
    CHECK(nba_accepts(nba, Lasso{{1}, {0}}, signals));             // g only at position 0
    CHECK_FALSE(nba_accepts(nba, Lasso{{0, 0, 0}, {0}}, signals));
}

TEST_CASE("NBA for false has the empty language") {
    const Nba nba = ltl_to_nba(nnf(parse_ltl("false")));
    for (const Lasso& lasso : all_lassos(1, 3))
        CHECK_FALSE(nba_accepts(nba, lasso, {"g"}));
}

TEST_CASE("NBA for the negated one-client response property") {
    // F (r && G !g): some request is never answered
    const Nba nba = ltl_to_nba(nnf(parse_ltl("F (r && G !g)")));
    const std::vector<std::string> signals{"r", "g"};
    CHECK(nba_accepts(nba, Lasso{{1}, {0}}, signals));        // ({r}) (empty)^w
    CHECK_FALSE(nba_accepts(nba, Lasso{{1}, {2}}, signals));  // ({r}) ({g})^w
}

TEST_CASE("language correctness on an enumerated corpus") {
    const std::vector<std::string> signals{"a", "b"};
    const auto lassos = all_lassos(2, 4);
    long checked = 0;
    for (const LtlPtr& f : enumerate_formulas(signals, 4)) {
        const Nba nba = ltl_to_nba(nnf(f));
        for (const Lasso& lasso : lassos) {
            if (nba_accepts(nba, lasso, signals) != eval_ltl_on_lasso(f, lasso, signals)) {
                CAPTURE(to_string(f));
                CAPTURE(lasso.stem.size());
                CAPTURE(lasso.loop.size());
                REQUIRE(false);
            }
            ++checked;
        }
    }
    CHECK(checked > 1000000);
}

TEST_CASE("build_ucw reinterprets the negated formula's NBA") {
    SynthesisProblem p;
    p.inputs = {};
    p.outputs = {"g"};
    p.guarantees = {parse_ltl("G !g")};
    const UniversalCoBuchi ucw = build_ucw(p);
    // UCW of G !g is the NBA of F g with its accepting states rejecting
    const Nba nba = ltl_to_nba(nnf(parse_ltl("G !g"), true));
    CHECK(ucw.num_states == nba.num_states);
    CHECK(ucw.rejecting == nba.accepting);
    CHECK(ucw.rejecting_count() > 0);
    CHECK(ucw.atoms == std::vector<std::string>{"g"});
}

TEST_CASE("UCW of true rejects nothing") {
    SynthesisProblem p;
    p.outputs = {"g"};
    const UniversalCoBuchi ucw = build_ucw(p);
    CHECK(ucw.rejecting_count() == 0);
}
