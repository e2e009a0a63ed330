#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bosy/error.hpp"
#include "bosy/machine.hpp"
#include "bosy/search.hpp"
#include "bosy/translate.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace bosy;
using namespace bosy::testing;

namespace {

// the alternating-grant machine of the worked example: unconditional
// two-state cycle, g_0 granted in state 1, g_1 in state 0
Machine alternating_arbiter() {
    Machine m;
    m.semantics = Semantics::Mealy;
    m.inputs = {"r_0", "r_1"};
    m.outputs = {"g_0", "g_1"};
    m.num_states = 2;
    const PropPtr t = Prop::constant(true), f = Prop::constant(false);
    m.guards = {{f, t}, {t, f}};
    m.output_fn = {{f, t}, {t, f}};
    return m;
}

UniversalCoBuchi arbiter_ucw() {
    const SynthesisProblem p = parse_spec(suite()[0].json);
    PipelineOptions options;
    return build_spec_automaton(p, options);
}

}  // namespace

TEST_CASE("the alternating machine is total and deterministic") {
    CHECK(check_total_deterministic(alternating_arbiter()));
}

TEST_CASE("nondeterministic guards fail the check") {
    Machine m = alternating_arbiter();
    m.guards[0][0] = Prop::constant(true);  // now both guards of state 0 hold
    CHECK_FALSE(check_total_deterministic(m));
}

TEST_CASE("partial transition functions fail the check") {
    Machine m = alternating_arbiter();
    m.guards[0][1] = Prop::atom("r_0");  // no successor when !r_0
    CHECK_FALSE(check_total_deterministic(m));
}

TEST_CASE("moore outputs may not read inputs") {
    Machine m = alternating_arbiter();
    m.semantics = Semantics::Moore;
    CHECK(check_total_deterministic(m));
    m.output_fn[0][0] = Prop::atom("r_0");
    CHECK_FALSE(check_total_deterministic(m));
}

TEST_CASE("the alternating machine model-checks against the arbiter UCW") {
    CHECK(model_check(alternating_arbiter(), arbiter_ucw()));
}

TEST_CASE("the constant both-grants machine violates mutual exclusion") {
    Machine m = alternating_arbiter();
    m.num_states = 1;
    m.guards = {{Prop::constant(true)}};
    m.output_fn = {{Prop::constant(true)}, {Prop::constant(true)}};
    CHECK(check_total_deterministic(m));
    CHECK_FALSE(model_check(m, arbiter_ucw()));
}

TEST_CASE("an automaton with nothing rejecting accepts any machine") {
    UniversalCoBuchi a;
    a.num_states = 1;
    a.initial = 0;
    a.rejecting = {0};
    a.safety = {0};
    a.atoms = {"r_0", "r_1", "g_0", "g_1"};
    a.edges.push_back({0, Prop::constant(true), 0});
    CHECK(model_check(alternating_arbiter(), a));
}

TEST_CASE("signal mismatch is reported") {
    UniversalCoBuchi a = arbiter_ucw();
    a.atoms.push_back("mystery");
    CHECK_THROWS_WITH_AS(model_check(alternating_arbiter(), a),
                         doctest::Contains("signal mismatch"), Error);
}

TEST_CASE("model_check agrees with the lasso-driving oracle on small instances") {
    // for machines with at most 2 states over <= 3 signals, satisfaction on
    // all input lassos of size <= 4 coincides with the product check
    const char* names[] = {"response-simple", "mealy-match", "strong-until", "weak-until"};
    const auto input_lassos = all_lassos(1, 4);
    for (const char* name : names) {
        const auto it = std::find_if(suite().begin(), suite().end(),
                                     [&](const SuiteSpec& s) { return s.name == name; });
        REQUIRE(it != suite().end());
        const SynthesisProblem p = parse_spec(it->json);
        const LtlPtr phi = combine(p);
        PipelineOptions options;
        const UniversalCoBuchi a = build_spec_automaton(p, options);
        int agreements = 0;
        for (int n = 1; n <= 2; ++n) {
            for_each_machine(n, p.inputs, p.outputs, p.semantics, [&](const Machine& m) {
                bool all_lassos_ok = true;
                for (const Lasso& in : input_lassos) {
                    const Lasso trace = drive_machine(m, in);
                    if (!eval_ltl_on_lasso(phi, trace, trace_signals(m))) {
                        all_lassos_ok = false;
                        break;
                    }
                }
                CAPTURE(name);
                CAPTURE(n);
                REQUIRE(model_check(m, a) == all_lassos_ok);
                ++agreements;
                return true;
            });
        }
        CHECK(agreements > 0);
    }
}
