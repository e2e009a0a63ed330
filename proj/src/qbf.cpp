#include "bosy/qbf.hpp"

#include <set>
#include <unordered_map>

#include "bosy/error.hpp"

namespace bosy {

namespace {

void collect_vars(const TermPtr& t, std::set<int>& out) {
    switch (t->kind()) {
        case TermKind::Var:
            out.insert(t->var());
            return;
        case TermKind::NatCmp:
            for (int b : t->lhs().bits) out.insert(b);
            for (int b : t->rhs().bits) out.insert(b);
            return;
        default:
            for (const auto& c : t->children()) collect_vars(c, out);
    }
}

// substitute vars through `map` (0 entries untouched), constants through
// `fixed` (entries >= 0 force the value)
TermPtr substitute(const TermPtr& t, const std::vector<int>& map,
                   const std::vector<int>& fixed,
                   std::unordered_map<const Term*, TermPtr>& cache) {
    auto it = cache.find(t.get());
    if (it != cache.end()) return it->second;
    TermPtr result;
    switch (t->kind()) {
        case TermKind::Var: {
            const int v = t->var();
            if (fixed[std::size_t(v)] >= 0)
                result = Term::constant(fixed[std::size_t(v)] != 0);
            else if (map[std::size_t(v)] != 0)
                result = Term::variable(map[std::size_t(v)]);
            else
                result = t;
            break;
        }
        case TermKind::True:
        case TermKind::False:
            result = t;
            break;
        case TermKind::Not:
            result = Term::negate(substitute(t->children()[0], map, fixed, cache));
            break;
        case TermKind::And:
        case TermKind::Or: {
            std::vector<TermPtr> parts;
            parts.reserve(t->children().size());
            for (const auto& c : t->children()) parts.push_back(substitute(c, map, fixed, cache));
            result = t->kind() == TermKind::And ? Term::conj_all(std::move(parts))
                                                : Term::disj_all(std::move(parts));
            break;
        }
        case TermKind::Implies:
            result = Term::implies(substitute(t->children()[0], map, fixed, cache),
                                   substitute(t->children()[1], map, fixed, cache));
            break;
        case TermKind::NatCmp:
            throw Error("expand_universals requires a comparison-free matrix");
    }
    cache.emplace(t.get(), result);
    return result;
}

}  // namespace

QbfResult expand_universals(const QuantifiedProblem& problem, VarRegistry& registry) {
    // normalize the prefix to at most exists-forall-exists
    std::vector<QuantBlock> blocks;
    for (const auto& b : problem.prefix) {
        if (b.vars.empty()) continue;
        if (!blocks.empty() && blocks.back().quant == b.quant)
            blocks.back().vars.insert(blocks.back().vars.end(), b.vars.begin(), b.vars.end());
        else
            blocks.push_back(b);
    }
    std::vector<int> outer_vars, universal_vars, inner_vars;
    if (blocks.size() > 3)
        throw Error("unsupported quantifier prefix shape (expected exists-forall-exists)");
    if (blocks.size() == 3) {
        if (blocks[0].quant != Quant::Exists || blocks[1].quant != Quant::Forall ||
            blocks[2].quant != Quant::Exists)
            throw Error("unsupported quantifier prefix shape (expected exists-forall-exists)");
        outer_vars = blocks[0].vars;
        universal_vars = blocks[1].vars;
        inner_vars = blocks[2].vars;
    } else if (blocks.size() == 2) {
        if (blocks[0].quant == Quant::Exists && blocks[1].quant == Quant::Forall) {
            outer_vars = blocks[0].vars;
            universal_vars = blocks[1].vars;
        } else if (blocks[0].quant == Quant::Forall && blocks[1].quant == Quant::Exists) {
            universal_vars = blocks[0].vars;
            inner_vars = blocks[1].vars;
        } else {
            throw Error("unsupported quantifier prefix shape (expected exists-forall-exists)");
        }
    } else if (blocks.size() == 1) {
        if (blocks[0].quant == Quant::Exists)
            outer_vars = blocks[0].vars;
        else
            universal_vars = blocks[0].vars;
    }
    if (universal_vars.size() > 16)
        throw Error("universal block too wide for expansion (limit 16)");

    const TermPtr matrix = lower_comparisons(problem.matrix);

    // bindings must cover and partition the matrix variables
    std::set<int> matrix_vars;
    collect_vars(matrix, matrix_vars);
    {
        std::set<int> bound;
        for (const auto* vars : {&outer_vars, &universal_vars, &inner_vars})
            for (int v : *vars)
                if (!bound.insert(v).second)
                    throw Error("variable bound twice in quantifier prefix");
        for (int v : matrix_vars)
            if (!bound.count(v))
                throw Error("matrix variable " + std::to_string(v) + " is unbound");
    }

    const int original_count = registry.count();
    const std::size_t valuations = std::size_t(1) << universal_vars.size();

    // per-valuation fresh copies of the inner block
    std::vector<std::vector<int>> copy_of(valuations);
    std::vector<TermPtr> parts;
    for (std::size_t u = 0; u < valuations; ++u) {
        std::vector<int> map(std::size_t(original_count) + 1, 0);
        std::vector<int> fixed(std::size_t(original_count) + 1, -1);
        for (std::size_t k = 0; k < universal_vars.size(); ++k)
            fixed[std::size_t(universal_vars[k])] = int((u >> k) & 1u);
        copy_of[u].reserve(inner_vars.size());
        for (int v : inner_vars) {
            const int fresh = registry.fresh("expansion copy of " + std::to_string(v) +
                                             " under valuation " + std::to_string(u));
            map[std::size_t(v)] = fresh;
            copy_of[u].push_back(fresh);
        }
        std::unordered_map<const Term*, TermPtr> cache;
        parts.push_back(substitute(matrix, map, fixed, cache));
    }

    const Cnf cnf = tseitin(Term::conj_all(std::move(parts)), registry);
    const SolveResult ground = solve_cnf(cnf);

    QbfResult result;
    result.universals = universal_vars;
    if (!ground.sat) return result;

    result.sat = true;
    result.outer = Model(original_count);
    for (int v : outer_vars) result.outer.set(v, ground.model.value(v) > 0);
    result.inner.reserve(valuations);
    for (std::size_t u = 0; u < valuations; ++u) {
        Model table(original_count);
        for (std::size_t k = 0; k < inner_vars.size(); ++k)
            table.set(inner_vars[k], ground.model.value(copy_of[u][k]) > 0);
        result.inner.push_back(std::move(table));
    }
    return result;
}

}  // namespace bosy
