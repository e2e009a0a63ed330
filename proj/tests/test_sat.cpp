#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bosy/sat.hpp"
#include "oracles.hpp"

using namespace bosy;
using namespace bosy::testing;

namespace {

bool model_satisfies(const Model& model, const Cnf& cnf) {
    for (const auto& clause : cnf.clauses) {
        bool sat = false;
        for (int lit : clause)
            if ((lit > 0) == (model.value(std::abs(lit)) > 0)) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

// pigeonhole principle: p pigeons into h holes, p > h is unsatisfiable
Cnf pigeonhole(int pigeons, int holes) {
    Cnf cnf;
    const auto var = [&](int p, int h) { return p * holes + h + 1; };
    cnf.num_vars = pigeons * holes;
    for (int p = 0; p < pigeons; ++p) {
        std::vector<int> clause;
        for (int h = 0; h < holes; ++h) clause.push_back(var(p, h));
        cnf.clauses.push_back(std::move(clause));
    }
    for (int h = 0; h < holes; ++h)
        for (int p1 = 0; p1 < pigeons; ++p1)
            for (int p2 = p1 + 1; p2 < pigeons; ++p2)
                cnf.clauses.push_back({-var(p1, h), -var(p2, h)});
    return cnf;
}

}  // namespace

TEST_CASE("forced literal") {
    Cnf cnf;
    cnf.num_vars = 1;
    cnf.clauses = {{1}};
    const SolveResult r = solve_cnf(cnf);
    REQUIRE(r.sat);
    CHECK(r.model.value(1) > 0);
}

TEST_CASE("contradictory units") {
    Cnf cnf;
    cnf.num_vars = 1;
    cnf.clauses = {{1}, {-1}};
    CHECK_FALSE(solve_cnf(cnf).sat);
}

TEST_CASE("empty formula and empty clause") {
    Cnf empty;
    CHECK(solve_cnf(empty).sat);

    Cnf contradiction;
    contradiction.num_vars = 2;
    contradiction.clauses = {{}};
    CHECK_FALSE(solve_cnf(contradiction).sat);
}

TEST_CASE("tautological and duplicate literals are handled") {
    Cnf cnf;
    cnf.num_vars = 2;
    cnf.clauses = {{1, -1}, {2, 2}, {-2, -2, 1}};
    const SolveResult r = solve_cnf(cnf);
    REQUIRE(r.sat);
    CHECK(model_satisfies(r.model, cnf));
}

TEST_CASE("pigeonhole 3 into 2 is unsatisfiable") {
    const Cnf cnf = pigeonhole(3, 2);
    CHECK_FALSE(truth_table_satisfiable(cnf));  // exhaustive 2^6 cross-check
    CHECK_FALSE(solve_cnf(cnf).sat);
}

TEST_CASE("pigeonhole 4 into 3 is unsatisfiable") {
    CHECK_FALSE(solve_cnf(pigeonhole(4, 3)).sat);
}

TEST_CASE("pigeonhole 5 into 4 is satisfiable once a pigeon is removed") {
    Cnf cnf = pigeonhole(4, 4);
    const SolveResult r = solve_cnf(cnf);
    REQUIRE(r.sat);
    CHECK(model_satisfies(r.model, cnf));
}

TEST_CASE("agreement with truth-table enumeration on random formulas") {
    std::mt19937 rng(20240615);
    int sat_count = 0;
    for (int round = 0; round < 1500; ++round) {
        const Cnf cnf = random_cnf(rng, 4, 8);
        const SolveResult r = solve_cnf(cnf);
        REQUIRE(r.sat == truth_table_satisfiable(cnf));
        if (r.sat) {
            ++sat_count;
            CHECK(model_satisfies(r.model, cnf));
        }
    }
    CHECK(sat_count > 100);  // the corpus exercises both outcomes
}

TEST_CASE("larger random instances keep models sound") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 60; ++round) {
        Cnf cnf;
        cnf.num_vars = 30;
        const int clauses = 60 + int(rng() % 80u);
        for (int c = 0; c < clauses; ++c) {
            std::vector<int> clause;
            for (int k = 0; k < 3; ++k) {
                const int v = 1 + int(rng() % 30u);
                clause.push_back(rng() % 2 ? v : -v);
            }
            cnf.clauses.push_back(std::move(clause));
        }
        const SolveResult r = solve_cnf(cnf);
        if (r.sat) CHECK(model_satisfies(r.model, cnf));
    }
}

TEST_CASE("determinism: repeated runs return the same model") {
    std::mt19937 rng(5150);
    for (int round = 0; round < 50; ++round) {
        const Cnf cnf = random_cnf(rng, 4, 8);
        const SolveResult a = solve_cnf(cnf);
        const SolveResult b = solve_cnf(cnf);
        REQUIRE(a.sat == b.sat);
        if (a.sat)
            for (int v = 1; v <= cnf.num_vars; ++v) CHECK(a.model.value(v) == b.model.value(v));
    }
}
