#pragma once

// Universal co-Buchi automata with formula-labeled edges, plus the two
// automaton optimizations: demotion of rejecting sinks to safety conditions
// and SCC analysis for the annotation bounds.

#include <optional>
#include <string>
#include <vector>

#include "bosy/prop.hpp"

namespace bosy {

struct AutomatonEdge {
    int source;
    PropPtr label;  // propositional over the signal set, no temporal operators
    int target;
};

// SCC partition and the per-state count r(q) = |Rej /\ SCC(q)| that bounds
// the annotation counters. Present only after analyze_sccs has run; encoders
// fall back to a single all-comparable component when absent.
struct SccInfo {
    std::vector<int> component;               // state -> component index
    std::vector<int> rejecting_in_component;  // state -> r(q)
    int component_count = 0;
};

struct UniversalCoBuchi {
    int num_states = 0;
    int initial = 0;
    std::vector<AutomatonEdge> edges;
    std::vector<char> rejecting;  // Rej
    std::vector<char> safety;     // demoted rejecting sinks; edges into them are
                                  // forbidden-entry conditions for the encoders
    std::vector<std::string> atoms;  // signal universe the labels draw from
    std::optional<SccInfo> scc;

    std::vector<std::vector<int>> edges_by_source() const;
    int rejecting_count() const;
};

// Moves every rejecting state whose outgoing edges are all self-loops with a
// tautological union label from Rej into Saf and drops its outgoing edges.
// Edges into the state are retained as forbidden-entry conditions.
UniversalCoBuchi demote_safety_states(UniversalCoBuchi a);

// Tarjan SCC partition over the edge graph; fills SccInfo.
UniversalCoBuchi analyze_sccs(UniversalCoBuchi a);

}  // namespace bosy
