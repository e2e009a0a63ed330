#include "bosy/encode.hpp"

#include <set>
#include <string>

#include "bosy/error.hpp"

namespace bosy {

namespace {

std::string subscript(int s, int q) {
    return "(" + std::to_string(s) + "," + std::to_string(q) + ")";
}

bool same_scc(const UniversalCoBuchi& a, int q1, int q2) {
    if (!a.scc) return true;  // unoptimized: everything comparable
    return a.scc->component[std::size_t(q1)] == a.scc->component[std::size_t(q2)];
}

int rejecting_share(const UniversalCoBuchi& a, int q) {
    if (!a.scc) return a.rejecting_count();
    return a.scc->rejecting_in_component[std::size_t(q)];
}

}  // namespace

EncodingContext make_context(const UniversalCoBuchi& automaton, int bound,
                             const std::vector<std::string>& inputs,
                             const std::vector<std::string>& outputs, Semantics semantics,
                             Backend backend) {
    if (bound < 1) throw Error("bound must be at least 1");
    EncodingContext ctx;
    ctx.automaton = &automaton;
    ctx.bound = bound;
    ctx.inputs = inputs;
    ctx.outputs = outputs;
    ctx.semantics = semantics;
    ctx.backend = backend;

    const int n = bound;
    const int num_q = automaton.num_states;

    ctx.reach.assign(std::size_t(n), std::vector<int>(std::size_t(num_q), 0));
    for (int s = 0; s < n; ++s)
        for (int q = 0; q < num_q; ++q) {
            if (automaton.safety[std::size_t(q)]) continue;
            ctx.reach[std::size_t(s)][std::size_t(q)] =
                ctx.registry.fresh("reach" + subscript(s, q));
        }

    ctx.counter.assign(std::size_t(n), std::vector<BoundedNat>(std::size_t(num_q)));
    for (int s = 0; s < n; ++s)
        for (int q = 0; q < num_q; ++q) {
            if (automaton.safety[std::size_t(q)]) continue;
            const int r = rejecting_share(automaton, q);
            if (r == 0) continue;
            ctx.counter[std::size_t(s)][std::size_t(q)] = BoundedNat::allocate(
                ctx.registry, std::uint32_t(n) * std::uint32_t(r), "counter" + subscript(s, q));
        }
    ctx.num_annotation_vars = ctx.registry.count();

    if (backend == Backend::Qbf) {
        for (const auto& name : inputs)
            ctx.input_vars.push_back(ctx.registry.fresh("input " + name));
    }

    const int before_transition = ctx.registry.count();
    if (backend == Backend::Sat) {
        if (inputs.size() > 16) throw Error("propositional encoding limited to 16 inputs");
        const std::uint32_t num_valuations = 1u << inputs.size();
        ctx.succ_concrete.resize(std::size_t(n));
        for (int s = 0; s < n; ++s)
            for (std::uint32_t i = 0; i < num_valuations; ++i)
                ctx.succ_concrete[std::size_t(s)].push_back(BoundedNat::allocate(
                    ctx.registry, std::uint32_t(n - 1),
                    "succ(" + std::to_string(s) + ",i" + std::to_string(i) + ")"));
        if (semantics == Semantics::Mealy) {
            ctx.out_concrete.resize(outputs.size());
            for (std::size_t o = 0; o < outputs.size(); ++o) {
                ctx.out_concrete[o].resize(std::size_t(n));
                for (int s = 0; s < n; ++s)
                    for (std::uint32_t i = 0; i < num_valuations; ++i)
                        ctx.out_concrete[o][std::size_t(s)].push_back(
                            ctx.registry.fresh(outputs[o] + "(" + std::to_string(s) + ",i" +
                                               std::to_string(i) + ")"));
            }
        }
    } else {
        for (int s = 0; s < n; ++s)
            ctx.succ_symbolic.push_back(BoundedNat::allocate(
                ctx.registry, std::uint32_t(n - 1), "succ(" + std::to_string(s) + ")"));
    }
    if (backend == Backend::Qbf || semantics == Semantics::Moore) {
        ctx.out_state.resize(outputs.size());
        for (std::size_t o = 0; o < outputs.size(); ++o)
            for (int s = 0; s < n; ++s)
                ctx.out_state[o].push_back(
                    ctx.registry.fresh(outputs[o] + "(" + std::to_string(s) + ")"));
    }
    ctx.num_transition_output_vars = ctx.registry.count() - before_transition;
    return ctx;
}

namespace {

// The symbolic builder passes nullopt as the valuation.
using InputPoint = std::optional<std::uint32_t>;

TermPtr output_term(const EncodingContext& ctx, std::size_t o, int s, InputPoint point) {
    if (ctx.semantics == Semantics::Mealy && ctx.backend == Backend::Sat)
        return Term::variable(ctx.out_concrete[o][std::size_t(s)][std::size_t(*point)]);
    return Term::variable(ctx.out_state[o][std::size_t(s)]);
}

const BoundedNat& successor_nat(const EncodingContext& ctx, int s, InputPoint point) {
    if (ctx.backend == Backend::Sat)
        return ctx.succ_concrete[std::size_t(s)][std::size_t(*point)];
    return ctx.succ_symbolic[std::size_t(s)];
}

// edge label with inputs substituted (constants or universal variables) and
// outputs substituted by the machine's output variables at (s, point)
TermPtr label_term(const EncodingContext& ctx, const PropPtr& label, int s, InputPoint point) {
    switch (label->kind()) {
        case PropKind::True:
            return Term::constant(true);
        case PropKind::False:
            return Term::constant(false);
        case PropKind::Not:
            return Term::negate(label_term(ctx, label->children()[0], s, point));
        case PropKind::And:
        case PropKind::Or: {
            std::vector<TermPtr> parts;
            parts.reserve(label->children().size());
            for (const auto& c : label->children())
                parts.push_back(label_term(ctx, c, s, point));
            return label->kind() == PropKind::And ? Term::conj_all(std::move(parts))
                                                  : Term::disj_all(std::move(parts));
        }
        case PropKind::Atom: {
            const std::string& name = label->atom_name();
            for (std::size_t k = 0; k < ctx.inputs.size(); ++k)
                if (ctx.inputs[k] == name) {
                    if (point) return Term::constant(((*point >> k) & 1u) != 0);
                    return Term::variable(ctx.input_vars[k]);
                }
            for (std::size_t o = 0; o < ctx.outputs.size(); ++o)
                if (ctx.outputs[o] == name) return output_term(ctx, o, s, point);
            throw Error("automaton label mentions undeclared signal \"" + name + "\"");
        }
    }
    throw Error("corrupt edge label");
}

TermPtr nat_equals_const(const BoundedNat& nat, std::uint32_t value) {
    std::vector<TermPtr> parts;
    for (int k = 0; k < nat.width(); ++k) {
        const TermPtr bit = Term::variable(nat.bits[std::size_t(k)]);
        parts.push_back(((value >> k) & 1u) ? bit : Term::negate(bit));
    }
    return Term::conj_all(std::move(parts));  // width 0: always 0 == value
}

// annotation step constraint along an automaton edge q -> q' within the same
// machine step s -> s'
TermPtr counter_step(const EncodingContext& ctx, int s, int q, int s_next, int q_next) {
    const UniversalCoBuchi& a = *ctx.automaton;
    if (!same_scc(a, q, q_next)) return Term::constant(true);
    if (rejecting_share(a, q) == 0) return Term::constant(true);
    const BoundedNat& from = ctx.counter[std::size_t(s)][std::size_t(q)];
    const BoundedNat& to = ctx.counter[std::size_t(s_next)][std::size_t(q_next)];
    const NatOp op = a.rejecting[std::size_t(q_next)] ? NatOp::Gt : NatOp::Ge;
    return Term::nat_compare(to, op, from);
}

std::vector<TermPtr> core_constraints(EncodingContext& ctx, const std::vector<InputPoint>& points) {
    const UniversalCoBuchi& a = *ctx.automaton;
    const int n = ctx.bound;
    std::vector<TermPtr> constraints;

    if (a.safety[std::size_t(a.initial)]) {
        // the initial state is itself a forbidden safety condition
        constraints.push_back(Term::constant(false));
        return constraints;
    }

    // capacity caps for non-power-of-two ranges
    for (int s = 0; s < n; ++s)
        for (int q = 0; q < a.num_states; ++q) {
            const BoundedNat& c = ctx.counter[std::size_t(s)][std::size_t(q)];
            if (!c.is_constant()) constraints.push_back(nat_at_most(c, c.capacity));
        }
    if (ctx.backend == Backend::Sat) {
        for (const auto& per_state : ctx.succ_concrete)
            for (const auto& nat : per_state)
                if (!nat.is_constant()) constraints.push_back(nat_at_most(nat, nat.capacity));
    } else {
        for (const auto& nat : ctx.succ_symbolic)
            if (!nat.is_constant()) constraints.push_back(nat_at_most(nat, nat.capacity));
    }

    constraints.push_back(Term::variable(ctx.reach[0][std::size_t(a.initial)]));

    for (int s = 0; s < n; ++s) {
        for (const auto& edge : a.edges) {
            if (a.safety[std::size_t(edge.source)]) continue;
            const TermPtr reach_here =
                Term::variable(ctx.reach[std::size_t(s)][std::size_t(edge.source)]);
            for (const InputPoint& point : points) {
                const TermPtr beta = label_term(ctx, edge.label, s, point);
                if (is_false(beta)) continue;
                if (a.safety[std::size_t(edge.target)]) {
                    // forbidden entry: never enable an edge into a demoted state
                    constraints.push_back(
                        Term::negate(Term::conj(reach_here, beta)));
                    continue;
                }
                for (int s_next = 0; s_next < n; ++s_next) {
                    const TermPtr premise = Term::conj_all(
                        {reach_here, beta,
                         nat_equals_const(successor_nat(ctx, s, point), std::uint32_t(s_next))});
                    const TermPtr conclusion = Term::conj(
                        Term::variable(ctx.reach[std::size_t(s_next)][std::size_t(edge.target)]),
                        counter_step(ctx, s, edge.source, s_next, edge.target));
                    constraints.push_back(Term::implies(premise, conclusion));
                }
            }
        }
    }
    return constraints;
}

}  // namespace

TermPtr encode_propositional(EncodingContext& ctx) {
    if (ctx.backend != Backend::Sat) throw Error("context was not built for the SAT backend");
    std::vector<InputPoint> points;
    for (std::uint32_t i = 0; i < (1u << ctx.inputs.size()); ++i) points.emplace_back(i);
    return Term::conj_all(core_constraints(ctx, points));
}

QuantifiedProblem encode_input_symbolic(EncodingContext& ctx) {
    if (ctx.backend != Backend::Qbf) throw Error("context was not built for the QBF backend");
    QuantifiedProblem problem;
    problem.matrix = Term::conj_all(core_constraints(ctx, {InputPoint{}}));

    QuantBlock outer{Quant::Exists, {}};
    for (const auto& per_state : ctx.reach)
        for (int v : per_state)
            if (v) outer.vars.push_back(v);
    for (const auto& per_state : ctx.counter)
        for (const auto& nat : per_state)
            for (int b : nat.bits) outer.vars.push_back(b);
    if (ctx.semantics == Semantics::Moore)
        for (const auto& per_output : ctx.out_state)
            for (int v : per_output) outer.vars.push_back(v);

    QuantBlock universal{Quant::Forall, ctx.input_vars};

    QuantBlock inner{Quant::Exists, {}};
    for (const auto& nat : ctx.succ_symbolic)
        for (int b : nat.bits) inner.vars.push_back(b);
    if (ctx.semantics == Semantics::Mealy)
        for (const auto& per_output : ctx.out_state)
            for (int v : per_output) inner.vars.push_back(v);

    problem.prefix = {std::move(outer), std::move(universal), std::move(inner)};
    return problem;
}

namespace {

// merge minterms into cubes (care mask + values): two cubes with the same
// mask differing in one care bit collapse into one
PropPtr minterm_disjunction(const std::vector<std::string>& inputs,
                            const std::vector<std::uint32_t>& valuations) {
    const std::uint32_t all = 1u << inputs.size();
    if (valuations.size() == all) return Prop::constant(true);
    if (valuations.empty()) return Prop::constant(false);

    const std::uint32_t full_mask = all - 1;
    std::set<std::pair<std::uint32_t, std::uint32_t>> cubes;  // (mask, values)
    for (std::uint32_t v : valuations) cubes.emplace(full_mask, v);
    bool merged = true;
    while (merged) {
        merged = false;
        for (auto it = cubes.begin(); it != cubes.end() && !merged; ++it) {
            for (auto jt = std::next(it); jt != cubes.end(); ++jt) {
                if (it->first != jt->first) continue;
                const std::uint32_t diff = (it->second ^ jt->second) & it->first;
                if (diff == 0 || (diff & (diff - 1)) != 0) continue;  // not one bit
                const std::pair<std::uint32_t, std::uint32_t> cube{it->first & ~diff,
                                                                   it->second & ~diff};
                cubes.erase(jt);
                cubes.erase(it);
                cubes.insert(cube);
                merged = true;
                break;
            }
        }
    }

    std::vector<PropPtr> parts;
    for (const auto& [mask, values] : cubes) {
        std::vector<PropPtr> lits;
        for (std::size_t k = 0; k < inputs.size(); ++k) {
            if (!((mask >> k) & 1u)) continue;
            PropPtr a = Prop::atom(inputs[k]);
            lits.push_back(((values >> k) & 1u) ? a : Prop::negate(a));
        }
        parts.push_back(Prop::conj_all(std::move(lits)));
    }
    return Prop::disj_all(std::move(parts));
}

std::uint32_t nat_value(const BoundedNat& nat, const Model& model) {
    std::uint32_t v = 0;
    for (int k = 0; k < nat.width(); ++k) {
        const int value = model.value(nat.bits[std::size_t(k)]);
        if (value == 0) throw Error("model incomplete for a successor variable");
        if (value > 0) v |= 1u << k;
    }
    return v;
}

int required_value(const Model& model, int var, const char* what) {
    const int v = model.value(var);
    if (v == 0) throw Error(std::string("model incomplete for a required ") + what + " variable");
    return v;
}

Machine machine_skeleton(const EncodingContext& ctx) {
    Machine m;
    m.semantics = ctx.semantics;
    m.inputs = ctx.inputs;
    m.outputs = ctx.outputs;
    m.num_states = ctx.bound;
    m.guards.assign(std::size_t(ctx.bound),
                    std::vector<PropPtr>(std::size_t(ctx.bound), Prop::constant(false)));
    m.output_fn.assign(ctx.outputs.size(),
                       std::vector<PropPtr>(std::size_t(ctx.bound), Prop::constant(false)));
    return m;
}

}  // namespace

Machine decode_machine(const EncodingContext& ctx, const Model& model) {
    if (ctx.backend != Backend::Sat) throw Error("SAT decode requires a SAT context");
    Machine m = machine_skeleton(ctx);
    const std::uint32_t num_valuations = 1u << ctx.inputs.size();
    for (int s = 0; s < ctx.bound; ++s) {
        std::vector<std::vector<std::uint32_t>> into(std::size_t(ctx.bound));
        for (std::uint32_t i = 0; i < num_valuations; ++i)
            into[nat_value(ctx.succ_concrete[std::size_t(s)][i], model)].push_back(i);
        for (int t = 0; t < ctx.bound; ++t)
            m.guards[std::size_t(s)][std::size_t(t)] =
                minterm_disjunction(ctx.inputs, into[std::size_t(t)]);
    }
    for (std::size_t o = 0; o < ctx.outputs.size(); ++o) {
        for (int s = 0; s < ctx.bound; ++s) {
            if (ctx.semantics == Semantics::Moore) {
                m.output_fn[o][std::size_t(s)] = Prop::constant(
                    required_value(model, ctx.out_state[o][std::size_t(s)], "output") > 0);
            } else {
                std::vector<std::uint32_t> where;
                for (std::uint32_t i = 0; i < num_valuations; ++i)
                    if (required_value(model, ctx.out_concrete[o][std::size_t(s)][i], "output") > 0)
                        where.push_back(i);
                m.output_fn[o][std::size_t(s)] = minterm_disjunction(ctx.inputs, where);
            }
        }
    }
    return m;
}

Machine decode_machine(const EncodingContext& ctx, const QbfResult& result) {
    if (ctx.backend != Backend::Qbf) throw Error("QBF decode requires a QBF context");
    Machine m = machine_skeleton(ctx);
    const std::uint32_t num_valuations = 1u << ctx.inputs.size();
    if (result.inner.size() != num_valuations)
        throw Error("model incomplete: missing Skolem tables");
    for (int s = 0; s < ctx.bound; ++s) {
        std::vector<std::vector<std::uint32_t>> into(std::size_t(ctx.bound));
        for (std::uint32_t i = 0; i < num_valuations; ++i)
            into[nat_value(ctx.succ_symbolic[std::size_t(s)], result.inner[i])].push_back(i);
        for (int t = 0; t < ctx.bound; ++t)
            m.guards[std::size_t(s)][std::size_t(t)] =
                minterm_disjunction(ctx.inputs, into[std::size_t(t)]);
    }
    for (std::size_t o = 0; o < ctx.outputs.size(); ++o) {
        for (int s = 0; s < ctx.bound; ++s) {
            if (ctx.semantics == Semantics::Moore) {
                m.output_fn[o][std::size_t(s)] = Prop::constant(
                    required_value(result.outer, ctx.out_state[o][std::size_t(s)], "output") > 0);
            } else {
                std::vector<std::uint32_t> where;
                for (std::uint32_t i = 0; i < num_valuations; ++i)
                    if (required_value(result.inner[i], ctx.out_state[o][std::size_t(s)],
                                       "output") > 0)
                        where.push_back(i);
                m.output_fn[o][std::size_t(s)] = minterm_disjunction(ctx.inputs, where);
            }
        }
    }
    return m;
}

}  // namespace bosy
