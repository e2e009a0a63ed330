#include "bosy/dimacs.hpp"

#include <sstream>

#include "bosy/error.hpp"

namespace bosy {

std::string emit_dimacs(const Cnf& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string emit_qdimacs(const QuantifiedCnf& problem) {
    for (const auto& block : problem.prefix)
        for (int v : block.vars)
            if (v < 1 || v > problem.matrix.num_vars)
                throw Error("quantifier prefix variable " + std::to_string(v) +
                            " is outside the matrix registry");
    std::ostringstream out;
    out << "p cnf " << problem.matrix.num_vars << ' ' << problem.matrix.clauses.size() << '\n';
    // merge adjacent blocks of the same quantifier, skip empty ones
    std::vector<QuantBlock> merged;
    for (const auto& block : problem.prefix) {
        if (block.vars.empty()) continue;
        if (!merged.empty() && merged.back().quant == block.quant)
            merged.back().vars.insert(merged.back().vars.end(), block.vars.begin(),
                                      block.vars.end());
        else
            merged.push_back(block);
    }
    for (const auto& block : merged) {
        out << (block.quant == Quant::Exists ? 'e' : 'a');
        for (int v : block.vars) out << ' ' << v;
        out << " 0\n";
    }
    for (const auto& clause : problem.matrix.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;

    bool next(std::string& line) {
        if (pos >= text.size()) return false;
        const auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            line.assign(text.substr(pos));
            pos = text.size();
        } else {
            line.assign(text.substr(pos, end - pos));
            pos = end + 1;
        }
        return true;
    }
};

}  // namespace

Cnf parse_dimacs(std::string_view text) {
    Cnf cnf;
    LineReader reader{text};
    std::string line;
    bool header_seen = false;
    std::vector<int> clause;
    while (reader.next(line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream in(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            std::size_t num_clauses;
            if (!(in >> p >> fmt >> cnf.num_vars >> num_clauses) || fmt != "cnf")
                throw Error("malformed DIMACS header: " + line);
            header_seen = true;
            continue;
        }
        int lit;
        while (in >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(clause);
                clause.clear();
            } else {
                clause.push_back(lit);
            }
        }
    }
    if (!header_seen) throw Error("missing DIMACS header");
    if (!clause.empty()) throw Error("unterminated clause in DIMACS input");
    for (const auto& c : cnf.clauses)
        for (int lit : c)
            if (std::abs(lit) > cnf.num_vars)
                throw Error("literal exceeds declared variable count");
    return cnf;
}

ParsedQdimacs parse_qdimacs(std::string_view text) {
    ParsedQdimacs out;
    LineReader reader{text};
    std::string line;
    bool header_seen = false;
    bool body_started = false;
    std::vector<int> clause;
    while (reader.next(line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream in(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            std::size_t num_clauses;
            if (!(in >> p >> fmt >> out.matrix.num_vars >> num_clauses) || fmt != "cnf")
                throw Error("malformed QDIMACS header: " + line);
            header_seen = true;
            continue;
        }
        if (line[0] == 'e' || line[0] == 'a') {
            if (body_started) throw Error("quantifier line after first clause");
            in.get();
            QuantBlock block{line[0] == 'e' ? Quant::Exists : Quant::Forall, {}};
            int v;
            while (in >> v) {
                if (v == 0) break;
                if (v < 0) throw Error("negative variable in quantifier line");
                block.vars.push_back(v);
            }
            out.prefix.push_back(std::move(block));
            continue;
        }
        body_started = true;
        int lit;
        while (in >> lit) {
            if (lit == 0) {
                out.matrix.clauses.push_back(clause);
                clause.clear();
            } else {
                clause.push_back(lit);
            }
        }
    }
    if (!header_seen) throw Error("missing QDIMACS header");
    if (!clause.empty()) throw Error("unterminated clause in QDIMACS input");
    return out;
}

std::vector<int> parse_assignment_lines(std::string_view output) {
    std::vector<int> literals;
    LineReader reader{output};
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || (line[0] != 'v' && line[0] != 'V')) continue;
        if (line.size() > 1 && !std::isspace(static_cast<unsigned char>(line[1]))) continue;
        std::istringstream in(line.substr(1));
        int lit;
        while (in >> lit)
            if (lit != 0) literals.push_back(lit);
        if (!in.eof()) throw Error("unparseable solver output: bad assignment line: " + line);
    }
    return literals;
}

}  // namespace bosy
