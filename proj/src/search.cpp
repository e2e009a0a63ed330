#include "bosy/search.hpp"

#include "bosy/dimacs.hpp"
#include "bosy/error.hpp"
#include "bosy/external.hpp"
#include "bosy/hoa.hpp"
#include "bosy/translate.hpp"

namespace bosy {

UniversalCoBuchi build_spec_automaton(const SynthesisProblem& problem,
                                      const PipelineOptions& options) {
    UniversalCoBuchi automaton;
    if (options.translator) {
        // the external tool receives the negated formula and answers in HOA
        const std::string formula = "!(" + to_string(combine(problem)) + ")";
        std::string command = *options.translator;
        const auto placeholder = command.find("{}");
        if (placeholder != std::string::npos)
            command = command.substr(0, placeholder) + shell_quote(formula) +
                      command.substr(placeholder + 2);
        else
            command += " " + shell_quote(formula);
        const RunResult run = run_shell_capture(command);
        if (run.exit_status != 0)
            throw Error("external translator exited with status " +
                        std::to_string(run.exit_status));
        std::vector<std::string> signals = problem.inputs;
        signals.insert(signals.end(), problem.outputs.begin(), problem.outputs.end());
        automaton = parse_hoa(run.output, signals);
    } else {
        automaton = build_ucw(problem);
    }
    if (options.optimize_demote) automaton = demote_safety_states(std::move(automaton));
    if (options.optimize_scc) automaton = analyze_sccs(std::move(automaton));
    return automaton;
}

namespace {

Model model_from_literals(const std::vector<int>& literals, int num_vars) {
    Model model(num_vars);
    for (int lit : literals) {
        const int var = std::abs(lit);
        if (var >= 1 && var <= num_vars) model.set(var, lit > 0);
    }
    return model;
}

BoundResult solve_bound_sat(EncodingContext& ctx, const PipelineOptions& options) {
    const TermPtr system = encode_propositional(ctx);
    BoundResult result;
    Model model;
    if (options.external_sat) {
        const Cnf cnf = tseitin(lower_comparisons(system), ctx.registry);
        const ExternalResult external =
            solve_external(*options.external_sat, emit_dimacs(cnf), SolverFormat::Dimacs);
        if (!external.sat) return result;
        result.sat = true;
        if (options.synthesize)
            model = model_from_literals(external.literals, ctx.registry.count());
    } else {
        const Cnf cnf = tseitin(lower_comparisons(system), ctx.registry);
        const SolveResult solved = solve_cnf(cnf);
        if (!solved.sat) return result;
        result.sat = true;
        model = solved.model;
    }
    if (options.synthesize) result.machine = decode_machine(ctx, model);
    return result;
}

BoundResult solve_bound_qbf(EncodingContext& ctx, const PipelineOptions& options) {
    QuantifiedProblem problem = encode_input_symbolic(ctx);
    BoundResult result;
    if (options.external_qbf) {
        // step one: the external solver decides the query and reports the
        // assignment of the top-level existential block
        VarRegistry emit_registry = ctx.registry;
        const QuantifiedCnf qcnf = to_quantified_cnf(problem, emit_registry);
        const ExternalResult external =
            solve_external(*options.external_qbf, emit_qdimacs(qcnf), SolverFormat::Qdimacs);
        if (!external.sat) return result;
        result.sat = true;
        if (!options.synthesize) return result;
        // step two: fix the extracted top-level assignment and solve the
        // residual forall-exists problem internally for the Skolem tables
        std::vector<char> outer(std::size_t(ctx.registry.count()) + 1, 0);
        if (!problem.prefix.empty() && problem.prefix[0].quant == Quant::Exists)
            for (int v : problem.prefix[0].vars) outer[std::size_t(v)] = 1;
        std::vector<TermPtr> fixed{problem.matrix};
        for (int lit : external.literals) {
            const int var = std::abs(lit);
            if (var < int(outer.size()) && outer[std::size_t(var)]) {
                const TermPtr v = Term::variable(var);
                fixed.push_back(lit > 0 ? v : Term::negate(v));
            }
        }
        problem.matrix = Term::conj_all(std::move(fixed));
        const QbfResult expanded = expand_universals(problem, ctx.registry);
        if (!expanded.sat)
            throw Error("external QBF solver's top-level assignment failed re-solving");
        result.machine = decode_machine(ctx, expanded);
        return result;
    }
    const QbfResult expanded = expand_universals(problem, ctx.registry);
    if (!expanded.sat) return result;
    result.sat = true;
    if (options.synthesize) result.machine = decode_machine(ctx, expanded);
    return result;
}

}  // namespace

BoundResult solve_bound(const UniversalCoBuchi& automaton, const SynthesisProblem& problem,
                        int bound, const PipelineOptions& options) {
    EncodingContext ctx = make_context(automaton, bound, problem.inputs, problem.outputs,
                                       problem.semantics, options.backend);
    BoundResult result = options.backend == Backend::Sat ? solve_bound_sat(ctx, options)
                                                         : solve_bound_qbf(ctx, options);
    if (result.machine) {
        if (!check_total_deterministic(*result.machine))
            throw Error("internal: decoded machine is not total-deterministic");
        if (!model_check(*result.machine, automaton))
            throw Error("internal: decoded machine fails verification against the automaton");
    }
    return result;
}

Verdict run_single(const SynthesisProblem& problem, const SearchStrategy& strategy,
                   const PipelineOptions& options) {
    const UniversalCoBuchi automaton = build_spec_automaton(problem, options);
    Verdict verdict;
    for (int bound = strategy.initial; !strategy.cap || bound <= *strategy.cap;
         bound = strategy.next(bound)) {
        const BoundResult result = solve_bound(automaton, problem, bound, options);
        if (result.sat) {
            verdict.outcome = Outcome::Realizable;
            verdict.machine = result.machine;
            verdict.bound = bound;
            return verdict;
        }
    }
    return verdict;  // cap exhausted
}

Verdict run_dual(const SynthesisProblem& problem, const SearchStrategy& strategy,
                 const PipelineOptions& options) {
    if (problem.player != Player::System)
        throw Error("run_dual requires a system-player problem");
    const SynthesisProblem counter_problem = dualize(problem);
    const UniversalCoBuchi system_automaton = build_spec_automaton(problem, options);
    const UniversalCoBuchi environment_automaton =
        build_spec_automaton(counter_problem, options);

    int system_bound = strategy.initial;
    int environment_bound = strategy.initial;
    bool system_done = false;
    bool environment_done = false;

    Verdict verdict;
    while (!system_done || !environment_done) {
        if (!system_done) {
            if (strategy.cap && system_bound > *strategy.cap) {
                system_done = true;
            } else {
                const BoundResult result =
                    solve_bound(system_automaton, problem, system_bound, options);
                if (result.sat) {
                    verdict.outcome = Outcome::Realizable;
                    verdict.machine = result.machine;
                    verdict.bound = system_bound;
                    return verdict;
                }
                system_bound = strategy.next(system_bound);
            }
        }
        if (!environment_done) {
            if (strategy.cap && environment_bound > *strategy.cap) {
                environment_done = true;
            } else {
                const BoundResult result = solve_bound(environment_automaton, counter_problem,
                                                       environment_bound, options);
                if (result.sat) {
                    verdict.outcome = Outcome::Unrealizable;
                    verdict.machine = result.machine;
                    verdict.bound = environment_bound;
                    return verdict;
                }
                environment_bound = strategy.next(environment_bound);
            }
        }
    }
    return verdict;  // both sides exhausted their caps
}

}  // namespace bosy
