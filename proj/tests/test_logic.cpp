#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bosy/dimacs.hpp"
#include "bosy/error.hpp"
#include "bosy/logic.hpp"
#include "oracles.hpp"

using namespace bosy;
using namespace bosy::testing;

namespace {

// evaluate a lowered comparison against integer semantics for every bit
// assignment of the participating variables
void check_lowering(const BoundedNat& x, const BoundedNat& y, int num_vars) {
    const TermPtr ge = lower_comparisons(Term::nat_compare(x, NatOp::Ge, y));
    const TermPtr gt = lower_comparisons(Term::nat_compare(x, NatOp::Gt, y));
    const TermPtr eq = lower_comparisons(Term::nat_compare(x, NatOp::Eq, y));
    for (std::uint32_t bits = 0; bits < (1u << num_vars); ++bits) {
        std::vector<bool> assignment(std::size_t(num_vars) + 1, false);
        for (int v = 1; v <= num_vars; ++v) assignment[std::size_t(v)] = (bits >> (v - 1)) & 1u;
        const auto value = [&](const BoundedNat& n) {
            if (n.is_constant()) return n.constant;
            std::uint32_t v = 0;
            for (int k = 0; k < n.width(); ++k)
                if (assignment[std::size_t(n.bits[std::size_t(k)])]) v |= 1u << k;
            return v;
        };
        CHECK(eval_term(ge, assignment) == (value(x) >= value(y)));
        CHECK(eval_term(gt, assignment) == (value(x) > value(y)));
        CHECK(eval_term(eq, assignment) == (value(x) == value(y)));
    }
}

}  // namespace

TEST_CASE("one-bit ge lowers to x or not y") {
    VarRegistry registry;
    const BoundedNat x = BoundedNat::allocate(registry, 1, "x");
    const BoundedNat y = BoundedNat::allocate(registry, 1, "y");
    const TermPtr lowered = lower_comparisons(Term::nat_compare(x, NatOp::Ge, y));
    for (std::uint32_t bits = 0; bits < 4; ++bits) {
        const bool xv = bits & 1u, yv = bits & 2u;
        std::vector<bool> assignment{false, xv, yv};
        CHECK(eval_term(lowered, assignment) == (xv || !yv));
    }
}

TEST_CASE("x > x simplifies to false") {
    VarRegistry registry;
    const BoundedNat x = BoundedNat::allocate(registry, 7, "x");
    CHECK(is_false(lower_comparisons(Term::nat_compare(x, NatOp::Gt, x))));
    CHECK(is_true(lower_comparisons(Term::nat_compare(x, NatOp::Ge, x))));
    CHECK(is_true(lower_comparisons(Term::nat_compare(x, NatOp::Eq, x))));
}

TEST_CASE("lowering matches integer comparison exhaustively") {
    VarRegistry registry;
    const BoundedNat x = BoundedNat::allocate(registry, 7, "x");
    const BoundedNat y = BoundedNat::allocate(registry, 7, "y");
    check_lowering(x, y, registry.count());

    VarRegistry mixed;
    const BoundedNat a = BoundedNat::allocate(mixed, 3, "a");
    const BoundedNat b = BoundedNat::allocate(mixed, 15, "b");
    check_lowering(a, b, mixed.count());
    check_lowering(b, a, mixed.count());
    check_lowering(a, BoundedNat::constant_value(2), mixed.count());
    check_lowering(BoundedNat::constant_value(5), b, mixed.count());
    check_lowering(BoundedNat::constant_value(3), BoundedNat::constant_value(4), mixed.count());
}

TEST_CASE("capacity constraint caps the value") {
    for (std::uint32_t cap = 0; cap <= 9; ++cap) {
        VarRegistry registry;
        const BoundedNat x = BoundedNat::allocate(registry, cap, "x");
        const TermPtr constraint = nat_at_most(x, cap);
        for (std::uint32_t bits = 0; bits < (1u << x.width()); ++bits) {
            std::vector<bool> assignment(std::size_t(registry.count()) + 1, false);
            for (int k = 0; k < x.width(); ++k)
                assignment[std::size_t(x.bits[std::size_t(k)])] = (bits >> k) & 1u;
            CHECK(eval_term(constraint, assignment) == (bits <= cap));
        }
    }
}

TEST_CASE("tseitin of a conjunction is the textbook clause set") {
    VarRegistry registry;
    const int a = registry.fresh("a"), b = registry.fresh("b");
    const Cnf cnf = tseitin(Term::conj(Term::variable(a), Term::variable(b)), registry);
    const int t = 3;  // the single auxiliary
    REQUIRE(registry.count() == 3);
    REQUIRE(cnf.clauses.size() == 4);
    CHECK(cnf.clauses[0] == std::vector<int>{-t, a});
    CHECK(cnf.clauses[1] == std::vector<int>{-t, b});
    CHECK(cnf.clauses[2] == std::vector<int>{t, -a, -b});
    CHECK(cnf.clauses[3] == std::vector<int>{t});
}

TEST_CASE("tseitin constants") {
    VarRegistry registry;
    CHECK(tseitin(Term::constant(true), registry).clauses.empty());
    const Cnf contradiction = tseitin(Term::constant(false), registry);
    REQUIRE(contradiction.clauses.size() == 1);
    CHECK(contradiction.clauses[0].empty());
}

namespace {

TermPtr random_term(std::mt19937& rng, int num_vars, int depth) {
    if (depth == 0 || rng() % 4 == 0) {
        switch (rng() % 6) {
            case 0: return Term::constant(true);
            case 1: return Term::constant(false);
            default: {
                const int v = 1 + int(rng() % std::uint32_t(num_vars));
                return rng() % 2 ? Term::variable(v) : Term::negate(Term::variable(v));
            }
        }
    }
    switch (rng() % 4) {
        case 0: return Term::negate(random_term(rng, num_vars, depth - 1));
        case 1: return Term::conj(random_term(rng, num_vars, depth - 1),
                                  random_term(rng, num_vars, depth - 1));
        case 2: return Term::disj(random_term(rng, num_vars, depth - 1),
                                  random_term(rng, num_vars, depth - 1));
        default: return Term::implies(random_term(rng, num_vars, depth - 1),
                                      random_term(rng, num_vars, depth - 1));
    }
}

}  // namespace

TEST_CASE("tseitin preserves satisfiability and models project onto the term") {
    std::mt19937 rng(777);
    for (int round = 0; round < 500; ++round) {
        VarRegistry registry;
        const int num_original = 4;
        for (int v = 0; v < num_original; ++v) registry.fresh("x");
        const TermPtr term = random_term(rng, num_original, 4);
        const Cnf cnf = tseitin(term, registry);

        // brute-force the term itself
        bool term_satisfiable = false;
        for (std::uint32_t bits = 0; bits < (1u << num_original) && !term_satisfiable; ++bits) {
            std::vector<bool> assignment(std::size_t(num_original) + 1, false);
            for (int v = 1; v <= num_original; ++v)
                assignment[std::size_t(v)] = (bits >> (v - 1)) & 1u;
            term_satisfiable = eval_term(term, assignment);
        }
        CHECK(truth_table_satisfiable(cnf) == term_satisfiable);

        // every CNF model restricted to the original variables satisfies t
        if (term_satisfiable) {
            for (std::uint32_t bits = 0; bits < (1u << cnf.num_vars); ++bits) {
                bool all = true;
                for (const auto& clause : cnf.clauses) {
                    bool sat = false;
                    for (int lit : clause)
                        if (((bits >> (std::abs(lit) - 1)) & 1u) == unsigned(lit > 0)) {
                            sat = true;
                            break;
                        }
                    if (!sat) { all = false; break; }
                }
                if (!all) continue;
                std::vector<bool> assignment(std::size_t(num_original) + 1, false);
                for (int v = 1; v <= num_original; ++v)
                    assignment[std::size_t(v)] = (bits >> (v - 1)) & 1u;
                CHECK(eval_term(term, assignment));
            }
        }
    }
}

TEST_CASE("emit_dimacs is byte-exact") {
    Cnf cnf;
    cnf.num_vars = 2;
    cnf.clauses = {{1, -2}};
    CHECK(emit_dimacs(cnf) == "p cnf 2 1\n1 -2 0\n");
    CHECK(emit_dimacs(Cnf{}) == "p cnf 0 0\n");
}

TEST_CASE("emit_qdimacs is byte-exact and validates the prefix") {
    QuantifiedCnf q;
    q.matrix.num_vars = 2;
    q.matrix.clauses = {{1, 2}};
    q.prefix = {{Quant::Exists, {1}}, {Quant::Forall, {2}}};
    CHECK(emit_qdimacs(q) == "p cnf 2 1\ne 1 0\na 2 0\n1 2 0\n");

    // empty prefix behaves like plain DIMACS
    QuantifiedCnf plain;
    plain.matrix = q.matrix;
    CHECK(emit_qdimacs(plain) == emit_dimacs(q.matrix));

    QuantifiedCnf bad = q;
    bad.prefix.push_back({Quant::Exists, {7}});
    CHECK_THROWS_WITH_AS(emit_qdimacs(bad), doctest::Contains("outside the matrix"), Error);
}

TEST_CASE("adjacent blocks merge and empty blocks vanish in qdimacs") {
    QuantifiedCnf q;
    q.matrix.num_vars = 3;
    q.matrix.clauses = {{1, 2, 3}};
    q.prefix = {{Quant::Exists, {1}}, {Quant::Exists, {2}}, {Quant::Forall, {}},
                {Quant::Forall, {3}}};
    CHECK(emit_qdimacs(q) == "p cnf 3 1\ne 1 2 0\na 3 0\n1 2 3 0\n");
}

TEST_CASE("dimacs round trip") {
    const Cnf cnf = parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n-3 0\n");
    CHECK(cnf.num_vars == 3);
    REQUIRE(cnf.clauses.size() == 2);
    CHECK(cnf.clauses[1] == std::vector<int>{-3});
    CHECK_THROWS_AS(parse_dimacs("1 -2 0\n"), Error);       // missing header
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n1\n"), Error);  // unterminated clause

    const ParsedQdimacs q = parse_qdimacs("p cnf 2 1\ne 1 0\na 2 0\n1 2 0\n");
    REQUIRE(q.prefix.size() == 2);
    CHECK(q.prefix[0].quant == Quant::Exists);
    CHECK(q.prefix[1].quant == Quant::Forall);
    CHECK(q.matrix.clauses == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("emissions are deterministic across identical builds") {
    const auto build = [] {
        VarRegistry registry;
        const BoundedNat x = BoundedNat::allocate(registry, 5, "x");
        const BoundedNat y = BoundedNat::allocate(registry, 5, "y");
        const TermPtr t = lower_comparisons(Term::nat_compare(x, NatOp::Gt, y));
        return emit_dimacs(tseitin(t, registry));
    };
    CHECK(build() == build());
}
