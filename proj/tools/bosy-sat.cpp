// Standalone DIMACS frontend for the internal CDCL core. Follows the solver
// conventions the external-solver adapter expects: exit 10 with v-lines on
// satisfiable instances, exit 20 on unsatisfiable ones.

#include <fstream>
#include <iostream>
#include <sstream>

#include "bosy/dimacs.hpp"
#include "bosy/sat.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: bosy-sat <instance.cnf>\n";
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
        const bosy::Cnf cnf = bosy::parse_dimacs(buffer.str());
        const bosy::SolveResult result = bosy::solve_cnf(cnf);
        if (!result.sat) {
            std::cout << "s UNSATISFIABLE\n";
            return 20;
        }
        std::cout << "s SATISFIABLE\n";
        std::cout << "v";
        for (int v = 1; v <= cnf.num_vars; ++v)
            std::cout << ' ' << (result.model.value(v) > 0 ? v : -v);
        std::cout << " 0\n";
        return 10;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
