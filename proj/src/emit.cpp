#include "bosy/emit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bosy/error.hpp"

namespace bosy {

namespace {

// ------------------------------------------------------------------ AIGER

// Literals: 0 = false, 1 = true; variable v has literals 2v / 2v+1.
// Variables: inputs first, then latches, then AND nodes.
class AigBuilder {
public:
    AigBuilder(int num_inputs, int num_latches)
        : num_inputs_(num_inputs), num_latches_(num_latches) {}

    int input_literal(int k) const { return 2 * (1 + k); }
    int latch_literal(int j) const { return 2 * (1 + num_inputs_ + j); }

    static int complement(int lit) { return lit ^ 1; }

    int make_and(int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == 0) return 0;
        if (a == 1) return b;
        if (a == b) return a;
        if (complement(a) == b) return 0;
        const auto key = std::make_pair(a, b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const int lit = 2 * (1 + num_inputs_ + num_latches_ + int(ands_.size()));
        ands_.push_back(key);
        cache_.emplace(key, lit);
        return lit;
    }

    int make_or(int a, int b) { return complement(make_and(complement(a), complement(b))); }

    int from_prop(const Prop& p, const std::vector<std::string>& inputs) {
        switch (p.kind()) {
            case PropKind::True: return 1;
            case PropKind::False: return 0;
            case PropKind::Not: return complement(from_prop(*p.children()[0], inputs));
            case PropKind::And: {
                int acc = 1;
                for (const auto& c : p.children()) acc = make_and(acc, from_prop(*c, inputs));
                return acc;
            }
            case PropKind::Or: {
                int acc = 0;
                for (const auto& c : p.children()) acc = make_or(acc, from_prop(*c, inputs));
                return acc;
            }
            case PropKind::Atom: {
                for (std::size_t k = 0; k < inputs.size(); ++k)
                    if (inputs[k] == p.atom_name()) return input_literal(int(k));
                throw Error("machine formula mentions undeclared input \"" + p.atom_name() + "\"");
            }
        }
        throw Error("corrupt machine formula");
    }

    const std::vector<std::pair<int, int>>& ands() const { return ands_; }

private:
    int num_inputs_;
    int num_latches_;
    std::vector<std::pair<int, int>> ands_;
    std::map<std::pair<int, int>, int> cache_;
};

int state_bits(int n) {
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    return bits;
}

}  // namespace

std::string emit_aiger(const Machine& m) {
    const int num_inputs = int(m.inputs.size());
    const int num_latches = state_bits(m.num_states);
    AigBuilder aig(num_inputs, num_latches);

    // state selectors; unreachable codes behave like state 0
    std::vector<int> selector(std::size_t(m.num_states));
    const auto state_equals = [&](int s) {
        int acc = 1;
        for (int j = 0; j < num_latches; ++j) {
            const int bit = aig.latch_literal(j);
            acc = aig.make_and(acc, ((s >> j) & 1) ? bit : AigBuilder::complement(bit));
        }
        return acc;
    };
    int any_nonzero = 0;
    for (int s = 1; s < m.num_states; ++s) {
        selector[std::size_t(s)] = state_equals(s);
        any_nonzero = aig.make_or(any_nonzero, selector[std::size_t(s)]);
    }
    selector[0] = AigBuilder::complement(any_nonzero);

    std::vector<int> next(std::size_t(num_latches), 0);
    for (int j = 0; j < num_latches; ++j) {
        int acc = 0;
        for (int s = 0; s < m.num_states; ++s) {
            int hit = 0;
            for (int t = 0; t < m.num_states; ++t) {
                if (!((t >> j) & 1)) continue;
                hit = aig.make_or(hit, aig.from_prop(*m.guards[std::size_t(s)][std::size_t(t)],
                                                     m.inputs));
            }
            acc = aig.make_or(acc, aig.make_and(selector[std::size_t(s)], hit));
        }
        next[std::size_t(j)] = acc;
    }

    std::vector<int> output_literal(m.outputs.size(), 0);
    for (std::size_t o = 0; o < m.outputs.size(); ++o) {
        int acc = 0;
        for (int s = 0; s < m.num_states; ++s)
            acc = aig.make_or(acc, aig.make_and(selector[std::size_t(s)],
                                                aig.from_prop(*m.output_fn[o][std::size_t(s)],
                                                              m.inputs)));
        output_literal[o] = acc;
    }

    const int max_var = num_inputs + num_latches + int(aig.ands().size());
    std::ostringstream out;
    out << "aag " << max_var << ' ' << num_inputs << ' ' << num_latches << ' '
        << m.outputs.size() << ' ' << aig.ands().size() << '\n';
    for (int k = 0; k < num_inputs; ++k) out << aig.input_literal(k) << '\n';
    for (int j = 0; j < num_latches; ++j)
        out << aig.latch_literal(j) << ' ' << next[std::size_t(j)] << '\n';
    for (std::size_t o = 0; o < m.outputs.size(); ++o) out << output_literal[o] << '\n';
    for (std::size_t k = 0; k < aig.ands().size(); ++k) {
        const auto [a, b] = aig.ands()[k];
        out << 2 * (1 + num_inputs + num_latches + int(k)) << ' ' << std::max(a, b) << ' '
            << std::min(a, b) << '\n';
    }
    for (int k = 0; k < num_inputs; ++k) out << 'i' << k << ' ' << m.inputs[std::size_t(k)] << '\n';
    for (int j = 0; j < num_latches; ++j) out << 'l' << j << " s" << j << '\n';
    for (std::size_t o = 0; o < m.outputs.size(); ++o) out << 'o' << o << ' ' << m.outputs[o] << '\n';
    return out.str();
}

// -------------------------------------------------------------------- SMV

std::string emit_smv(const Machine& m) {
    std::ostringstream out;
    out << "MODULE main\n";
    out << "  VAR\n";
    out << "    state: {";
    for (int s = 0; s < m.num_states; ++s) out << (s ? ", " : "") << 's' << s;
    out << "};\n";
    for (const auto& input : m.inputs) out << "    " << input << " : boolean;\n";
    out << "  ASSIGN\n";
    out << "    init(state) := s0;\n";
    out << "    next(state) := case\n";
    for (int s = 0; s < m.num_states; ++s)
        for (int t = 0; t < m.num_states; ++t) {
            const PropPtr& guard = m.guards[std::size_t(s)][std::size_t(t)];
            if (is_false(guard)) continue;
            out << "      state = s" << s << " & " << format_conjunct(guard, kSmvSyntax) << " : s" << t
                << ";\n";
        }
    out << "    esac;\n";
    out << "  DEFINE\n";
    for (std::size_t o = 0; o < m.outputs.size(); ++o) {
        out << "    " << m.outputs[o] << " := ";
        bool first = true;
        for (int s = 0; s < m.num_states; ++s) {
            const PropPtr& f = m.output_fn[o][std::size_t(s)];
            if (is_false(f)) continue;
            if (!first) out << " | ";
            out << "(state = s" << s << " & " << format_conjunct(f, kSmvSyntax) << ")";
            first = false;
        }
        if (first) out << "FALSE";
        out << ";\n";
    }
    return out.str();
}

// -------------------------------------------------------------------- DOT

namespace {

std::string output_tags(const Machine& m, int s) {
    std::string text;
    for (std::size_t o = 0; o < m.outputs.size(); ++o) {
        const PropPtr& f = m.output_fn[o][std::size_t(s)];
        if (!text.empty()) text += ' ';
        if (is_true(f)) text += m.outputs[o];
        else if (is_false(f)) text += "!" + m.outputs[o];
        else text += m.outputs[o] + "=" + format(f, kSmvSyntax);
    }
    return text;
}

}  // namespace

std::string emit_dot(const Machine& m) {
    std::ostringstream out;
    out << "digraph machine {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __init [shape=point, label=\"\"];\n";
    for (int s = 0; s < m.num_states; ++s) {
        out << "  s" << s << " [label=\"s" << s;
        if (m.semantics == Semantics::Moore && !m.outputs.empty())
            out << "\\n" << output_tags(m, s);
        out << "\"];\n";
    }
    out << "  __init -> s0;\n";
    for (int s = 0; s < m.num_states; ++s)
        for (int t = 0; t < m.num_states; ++t) {
            const PropPtr& guard = m.guards[std::size_t(s)][std::size_t(t)];
            if (is_false(guard)) continue;
            out << "  s" << s << " -> s" << t << " [label=\"" << format(guard, kSmvSyntax);
            if (m.semantics == Semantics::Mealy && !m.outputs.empty())
                out << " / " << output_tags(m, s);
            out << "\"];\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace bosy
