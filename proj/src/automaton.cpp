#include "bosy/automaton.hpp"

#include <algorithm>

#include "bosy/error.hpp"

namespace bosy {

std::vector<std::vector<int>> UniversalCoBuchi::edges_by_source() const {
    std::vector<std::vector<int>> out(num_states);
    for (std::size_t k = 0; k < edges.size(); ++k) out[edges[k].source].push_back(int(k));
    return out;
}

int UniversalCoBuchi::rejecting_count() const {
    int n = 0;
    for (char c : rejecting) n += c != 0;
    return n;
}

UniversalCoBuchi demote_safety_states(UniversalCoBuchi a) {
    const auto by_source = a.edges_by_source();
    std::vector<char> demote(a.num_states, 0);
    for (int q = 0; q < a.num_states; ++q) {
        if (!a.rejecting[q]) continue;
        const auto& out = by_source[q];
        if (out.empty()) continue;  // a dead rejecting state is harmless, not a sink
        bool all_self = true;
        std::vector<PropPtr> labels;
        for (int e : out) {
            if (a.edges[e].target != q) { all_self = false; break; }
            labels.push_back(a.edges[e].label);
        }
        if (!all_self) continue;
        if (!is_tautology(Prop::disj_all(std::move(labels)))) continue;
        demote[q] = 1;
    }

    bool any = false;
    for (int q = 0; q < a.num_states; ++q) {
        if (!demote[q]) continue;
        any = true;
        a.rejecting[q] = 0;
        a.safety[q] = 1;
    }
    if (any) {
        std::vector<AutomatonEdge> kept;
        kept.reserve(a.edges.size());
        for (auto& e : a.edges)
            if (!demote[e.source]) kept.push_back(std::move(e));
        a.edges = std::move(kept);
        a.scc.reset();  // stale after edge removal
    }
    return a;
}

namespace {

// Iterative Tarjan; component ids are assigned in completion order.
struct TarjanState {
    const std::vector<std::vector<int>>& succ;
    std::vector<int> index, lowlink, component;
    std::vector<char> on_stack;
    std::vector<int> stack;
    int next_index = 0;
    int next_component = 0;

    explicit TarjanState(const std::vector<std::vector<int>>& s)
        : succ(s),
          index(s.size(), -1),
          lowlink(s.size(), 0),
          component(s.size(), -1),
          on_stack(s.size(), 0) {}

    void run(int root) {
        struct Frame { int v; std::size_t child; };
        std::vector<Frame> frames;
        frames.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < succ[f.v].size()) {
                const int w = succ[f.v][f.child++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        component[w] = next_component;
                        if (w == f.v) break;
                    }
                    ++next_component;
                }
                const int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
            }
        }
    }
};

}  // namespace

UniversalCoBuchi analyze_sccs(UniversalCoBuchi a) {
    std::vector<std::vector<int>> succ(a.num_states);
    for (const auto& e : a.edges) succ[e.source].push_back(e.target);

    TarjanState tarjan(succ);
    for (int q = 0; q < a.num_states; ++q)
        if (tarjan.index[q] < 0) tarjan.run(q);

    SccInfo info;
    info.component = std::move(tarjan.component);
    info.component_count = tarjan.next_component;
    std::vector<int> rejecting_per_component(info.component_count, 0);
    for (int q = 0; q < a.num_states; ++q)
        if (a.rejecting[q]) ++rejecting_per_component[info.component[q]];
    info.rejecting_in_component.resize(a.num_states);
    for (int q = 0; q < a.num_states; ++q)
        info.rejecting_in_component[q] = rejecting_per_component[info.component[q]];

    a.scc = std::move(info);
    return a;
}

}  // namespace bosy
