#include "bosy/machine.hpp"

#include <algorithm>
#include <map>

#include "bosy/error.hpp"

namespace bosy {

bool eval_on_inputs(const PropPtr& p, const std::vector<std::string>& inputs,
                    std::uint32_t valuation) {
    return eval(*p, [&](const std::string& name) {
        for (std::size_t k = 0; k < inputs.size(); ++k)
            if (inputs[k] == name) return ((valuation >> k) & 1u) != 0;
        throw Error("guard mentions undeclared input \"" + name + "\"");
        return false;
    });
}

bool check_total_deterministic(const Machine& m) {
    if (m.inputs.size() > 16) throw Error("totality check limited to 16 inputs");
    if (m.semantics == Semantics::Moore) {
        for (const auto& per_state : m.output_fn)
            for (const auto& f : per_state) {
                std::set<std::string> atoms;
                collect_atoms(*f, atoms);
                if (!atoms.empty()) return false;
            }
    }
    const std::uint32_t num_valuations = 1u << m.inputs.size();
    for (int s = 0; s < m.num_states; ++s) {
        for (std::uint32_t i = 0; i < num_valuations; ++i) {
            int hits = 0;
            for (int t = 0; t < m.num_states; ++t)
                if (eval_on_inputs(m.guards[s][t], m.inputs, i)) ++hits;
            if (hits != 1) return false;
        }
    }
    return true;
}

namespace {

int unique_successor(const Machine& m, int state, std::uint32_t input) {
    for (int t = 0; t < m.num_states; ++t)
        if (eval_on_inputs(m.guards[state][t], m.inputs, input)) return t;
    throw Error("machine is not total");
}

}  // namespace

bool model_check(const Machine& m, const UniversalCoBuchi& a) {
    for (const auto& atom : a.atoms) {
        const bool known =
            std::find(m.inputs.begin(), m.inputs.end(), atom) != m.inputs.end() ||
            std::find(m.outputs.begin(), m.outputs.end(), atom) != m.outputs.end();
        if (!known) throw Error("signal mismatch: automaton atom \"" + atom + "\"");
    }
    if (m.inputs.size() > 16) throw Error("model check limited to 16 inputs");
    if (a.safety.size() && a.safety[std::size_t(a.initial)]) return false;

    const auto edges_by_source = a.edges_by_source();
    const std::uint32_t num_valuations = 1u << m.inputs.size();

    const auto node_id = [&](int s, int q) { return s * a.num_states + q; };
    std::vector<char> reached(std::size_t(m.num_states) * std::size_t(a.num_states), 0);
    std::vector<std::vector<int>> succ(reached.size());
    std::vector<int> worklist{node_id(0, a.initial)};
    reached[std::size_t(worklist[0])] = 1;

    while (!worklist.empty()) {
        const int node = worklist.back();
        worklist.pop_back();
        const int s = node / a.num_states;
        const int q = node % a.num_states;
        for (std::uint32_t i = 0; i < num_valuations; ++i) {
            const int s_next = unique_successor(m, s, i);
            // valuation of inputs and outputs at (s, i)
            auto letter = [&](const std::string& name) {
                for (std::size_t k = 0; k < m.inputs.size(); ++k)
                    if (m.inputs[k] == name) return ((i >> k) & 1u) != 0;
                for (std::size_t k = 0; k < m.outputs.size(); ++k)
                    if (m.outputs[k] == name)
                        return eval_on_inputs(m.output_fn[k][std::size_t(s)], m.inputs, i);
                throw Error("automaton label mentions unknown signal \"" + name + "\"");
                return false;
            };
            for (int e : edges_by_source[std::size_t(q)]) {
                const auto& edge = a.edges[std::size_t(e)];
                if (!eval(*edge.label, letter)) continue;
                if (a.safety[std::size_t(edge.target)]) return false;  // forbidden entry
                const int next = node_id(s_next, edge.target);
                succ[std::size_t(node)].push_back(next);
                if (!reached[std::size_t(next)]) {
                    reached[std::size_t(next)] = 1;
                    worklist.push_back(next);
                }
            }
        }
    }

    // reject if a rejecting automaton state lies on a reachable cycle:
    // SCC of size >= 2 containing it, or a self-loop
    const int total = int(reached.size());
    std::vector<int> index(std::size_t(total), -1), lowlink(std::size_t(total), 0),
        component(std::size_t(total), -1);
    std::vector<char> on_stack(std::size_t(total), 0);
    std::vector<int> stack;
    int next_index = 0, next_component = 0;

    struct Frame { int v; std::size_t child; };
    for (int root = 0; root < total; ++root) {
        if (!reached[std::size_t(root)] || index[std::size_t(root)] >= 0) continue;
        std::vector<Frame> frames{{root, 0}};
        index[std::size_t(root)] = lowlink[std::size_t(root)] = next_index++;
        stack.push_back(root);
        on_stack[std::size_t(root)] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < succ[std::size_t(f.v)].size()) {
                const int w = succ[std::size_t(f.v)][f.child++];
                if (index[std::size_t(w)] < 0) {
                    index[std::size_t(w)] = lowlink[std::size_t(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[std::size_t(w)] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[std::size_t(w)]) {
                    lowlink[std::size_t(f.v)] =
                        std::min(lowlink[std::size_t(f.v)], index[std::size_t(w)]);
                }
            } else {
                if (lowlink[std::size_t(f.v)] == index[std::size_t(f.v)]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[std::size_t(w)] = 0;
                        component[std::size_t(w)] = next_component;
                        if (w == f.v) break;
                    }
                    ++next_component;
                }
                const int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[std::size_t(frames.back().v)] =
                        std::min(lowlink[std::size_t(frames.back().v)], lowlink[std::size_t(v)]);
            }
        }
    }

    std::vector<int> component_size(std::size_t(next_component), 0);
    for (int v = 0; v < total; ++v)
        if (reached[std::size_t(v)]) ++component_size[std::size_t(component[std::size_t(v)])];

    for (int v = 0; v < total; ++v) {
        if (!reached[std::size_t(v)]) continue;
        const int q = v % a.num_states;
        if (!a.rejecting[std::size_t(q)]) continue;
        if (component_size[std::size_t(component[std::size_t(v)])] >= 2) return false;
        const auto& out = succ[std::size_t(v)];
        if (std::find(out.begin(), out.end(), v) != out.end()) return false;  // self-loop
    }
    return true;
}

}  // namespace bosy
