// Standalone QDIMACS frontend solving exists-forall-exists prefixes by
// universal expansion. Prints the top-level existential assignment on V lines
// and exits 10/20 like the external-solver convention requires.

#include <fstream>
#include <iostream>
#include <sstream>

#include "bosy/dimacs.hpp"
#include "bosy/qbf.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: bosy-qbf <instance.qdimacs>\n";
        return 3;
    }
    try {
        std::ostringstream buffer;
        if (std::string(argv[1]) == "-") {
            buffer << std::cin.rdbuf();
        } else {
            std::ifstream file(argv[1]);
            if (!file) {
                std::cerr << "error: cannot open " << argv[1] << "\n";
                return 3;
            }
            buffer << file.rdbuf();
        }
        const bosy::ParsedQdimacs parsed = bosy::parse_qdimacs(buffer.str());

        // free variables are outermost existentials per QDIMACS convention
        std::vector<char> bound(std::size_t(parsed.matrix.num_vars) + 1, 0);
        for (const auto& block : parsed.prefix)
            for (int v : block.vars) bound[std::size_t(v)] = 1;
        bosy::QuantifiedProblem problem;
        bosy::QuantBlock free_block{bosy::Quant::Exists, {}};
        for (int v = 1; v <= parsed.matrix.num_vars; ++v)
            if (!bound[std::size_t(v)]) free_block.vars.push_back(v);
        if (!free_block.vars.empty()) problem.prefix.push_back(std::move(free_block));
        problem.prefix.insert(problem.prefix.end(), parsed.prefix.begin(), parsed.prefix.end());

        std::vector<bosy::TermPtr> clauses;
        for (const auto& clause : parsed.matrix.clauses) {
            std::vector<bosy::TermPtr> lits;
            for (int lit : clause) {
                const bosy::TermPtr v = bosy::Term::variable(std::abs(lit));
                lits.push_back(lit > 0 ? v : bosy::Term::negate(v));
            }
            clauses.push_back(bosy::Term::disj_all(std::move(lits)));
        }
        problem.matrix = bosy::Term::conj_all(std::move(clauses));

        bosy::VarRegistry registry;
        for (int v = 1; v <= parsed.matrix.num_vars; ++v)
            registry.fresh("x" + std::to_string(v));

        const bosy::QbfResult result = bosy::expand_universals(problem, registry);
        if (!result.sat) {
            std::cout << "s cnf 0\n";
            return 20;
        }
        std::cout << "s cnf 1\n";
        std::cout << "V";
        const auto& outer_block =
            problem.prefix.empty() || problem.prefix[0].quant != bosy::Quant::Exists
                ? bosy::QuantBlock{bosy::Quant::Exists, {}}
                : problem.prefix[0];
        for (int v : outer_block.vars)
            std::cout << ' ' << (result.outer.value(v) > 0 ? v : -v);
        std::cout << " 0\n";
        return 10;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
