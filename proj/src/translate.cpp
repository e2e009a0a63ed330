#include "bosy/translate.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <tuple>

#include "bosy/error.hpp"

namespace bosy {

namespace {

// ---------------------------------------------------------------------------
// Interned NNF formulas. Negation appears only as NegAtom, so obligation sets
// can be plain sorted id vectors.

enum class NKind : std::uint8_t {
    PosAtom, NegAtom, True, False, And, Or, Next, Until, Release, Eventually, Always,
};

struct NNode {
    NKind kind;
    std::string atom;
    int left = -1;
    int right = -1;
};

class Arena {
public:
    int intern(NKind kind, std::string atom, int left, int right) {
        const Key key{int(kind), atom, left, right};
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        const int id = int(nodes_.size());
        nodes_.push_back(NNode{kind, std::move(atom), left, right});
        index_.emplace(key, id);
        return id;
    }

    int from_nnf(const LtlPtr& f) {
        switch (f->kind()) {
            case LtlKind::Atom:
                return intern(NKind::PosAtom, f->atom_name(), -1, -1);
            case LtlKind::True:
                return intern(NKind::True, "", -1, -1);
            case LtlKind::False:
                return intern(NKind::False, "", -1, -1);
            case LtlKind::Not:
                if (f->left()->kind() != LtlKind::Atom)
                    throw Error("translator input is not in negation normal form");
                return intern(NKind::NegAtom, f->left()->atom_name(), -1, -1);
            case LtlKind::And:
                return intern(NKind::And, "", from_nnf(f->left()), from_nnf(f->right()));
            case LtlKind::Or:
                return intern(NKind::Or, "", from_nnf(f->left()), from_nnf(f->right()));
            case LtlKind::Next:
                return intern(NKind::Next, "", from_nnf(f->left()), -1);
            case LtlKind::Until:
                return intern(NKind::Until, "", from_nnf(f->left()), from_nnf(f->right()));
            case LtlKind::Release:
                return intern(NKind::Release, "", from_nnf(f->left()), from_nnf(f->right()));
            case LtlKind::Eventually:
                return intern(NKind::Eventually, "", from_nnf(f->left()), -1);
            case LtlKind::Always:
                return intern(NKind::Always, "", from_nnf(f->left()), -1);
            default:
                throw Error("translator input is not in negation normal form");
        }
    }

    const NNode& node(int id) const { return nodes_[id]; }
    int size() const { return int(nodes_.size()); }

private:
    using Key = std::tuple<int, std::string, int, int>;
    std::vector<NNode> nodes_;
    std::map<Key, int> index_;
};

// ---------------------------------------------------------------------------
// Tableau expansion. A state is a sorted set of obligation ids; expanding it
// yields all covers (literal set, next obligations, postponed untils) such
// that the state's conjunction is equivalent to the disjunction over covers
// of  literals && X(next obligations).

struct Cover {
    std::map<std::string, bool> literals;
    std::set<int> next;
    std::set<int> postponed;  // until-type ids expanded through their X branch
};

class Expander {
public:
    explicit Expander(const Arena& arena) : arena_(arena) {}

    std::vector<Cover> expand(const std::vector<int>& state) {
        covers_.clear();
        Cover cover;
        std::set<int> processed;
        std::vector<int> todo(state.rbegin(), state.rend());  // pop from the back
        step(todo, processed, cover);
        return std::move(covers_);
    }

private:
    void step(std::vector<int> todo, std::set<int> processed, Cover cover) {
        while (!todo.empty()) {
            const int id = todo.back();
            todo.pop_back();
            if (!processed.insert(id).second) continue;
            const NNode& n = arena_.node(id);
            switch (n.kind) {
                case NKind::True:
                    break;
                case NKind::False:
                    return;  // inconsistent branch
                case NKind::PosAtom:
                case NKind::NegAtom: {
                    const bool value = n.kind == NKind::PosAtom;
                    auto it = cover.literals.find(n.atom);
                    if (it != cover.literals.end()) {
                        if (it->second != value) return;
                    } else {
                        cover.literals.emplace(n.atom, value);
                    }
                    break;
                }
                case NKind::And:
                    todo.push_back(n.right);
                    todo.push_back(n.left);
                    break;
                case NKind::Or: {
                    auto branch = todo;
                    branch.push_back(n.left);
                    step(std::move(branch), processed, cover);
                    todo.push_back(n.right);
                    break;
                }
                case NKind::Next:
                    cover.next.insert(n.left);
                    break;
                case NKind::Until: {
                    // a U b == b || (a && X(a U b))
                    auto fulfil = todo;
                    fulfil.push_back(n.right);
                    step(std::move(fulfil), processed, cover);
                    todo.push_back(n.left);
                    cover.next.insert(id);
                    cover.postponed.insert(id);
                    break;
                }
                case NKind::Eventually: {
                    // F a == a || X(F a)
                    auto fulfil = todo;
                    fulfil.push_back(n.left);
                    step(std::move(fulfil), processed, cover);
                    cover.next.insert(id);
                    cover.postponed.insert(id);
                    break;
                }
                case NKind::Release: {
                    // a R b == (b && a) || (b && X(a R b))
                    auto close = todo;
                    close.push_back(n.right);
                    close.push_back(n.left);
                    step(std::move(close), processed, cover);
                    todo.push_back(n.right);
                    cover.next.insert(id);
                    break;
                }
                case NKind::Always:
                    // G a == a && X(G a)
                    todo.push_back(n.left);
                    cover.next.insert(id);
                    break;
            }
        }
        covers_.push_back(std::move(cover));
    }

    const Arena& arena_;
    std::vector<Cover> covers_;
};

PropPtr literals_to_label(const std::map<std::string, bool>& literals) {
    std::vector<PropPtr> parts;
    for (const auto& [name, value] : literals) {
        PropPtr a = Prop::atom(name);
        parts.push_back(value ? a : Prop::negate(a));
    }
    return Prop::conj_all(std::move(parts));
}

struct GbaEdge {
    PropPtr label;
    int target;
    std::uint32_t satisfied;  // bit u set: acceptance set u satisfied (not postponed)
};

}  // namespace

Nba ltl_to_nba(const LtlPtr& f) {
    Arena arena;
    const int root = arena.from_nnf(f);

    // Acceptance sets: one per until-type node, indexed in arena order.
    std::map<int, int> until_index;
    for (int id = 0; id < arena.size(); ++id) {
        const NKind k = arena.node(id).kind;
        if (k == NKind::Until || k == NKind::Eventually)
            until_index.emplace(id, int(until_index.size()));
    }
    const int k = int(until_index.size());
    if (k > 30) throw Error("too many until subformulas");
    const std::uint32_t full_mask = k == 0 ? 0 : (1u << k) - 1;

    // Build the generalized automaton over obligation sets.
    std::map<std::vector<int>, int> state_index;
    std::vector<std::vector<int>> states;
    std::vector<std::vector<GbaEdge>> gba_edges;
    Expander expander(arena);

    auto intern_state = [&](std::vector<int> s) {
        auto it = state_index.find(s);
        if (it != state_index.end()) return it->second;
        const int id = int(states.size());
        state_index.emplace(s, id);
        states.push_back(std::move(s));
        gba_edges.emplace_back();
        return id;
    };

    const int gba_initial = intern_state({root});
    for (int s = 0; s < int(states.size()); ++s) {
        std::vector<Cover> covers = expander.expand(states[s]);
        for (Cover& cover : covers) {
            std::uint32_t satisfied = full_mask;
            for (int id : cover.postponed) satisfied &= ~(1u << until_index.at(id));
            // intern_state may grow gba_edges; complete it before subscripting
            const int target = intern_state(
                std::vector<int>(cover.next.begin(), cover.next.end()));
            GbaEdge edge{literals_to_label(cover.literals), target, satisfied};
            gba_edges[s].push_back(std::move(edge));
        }
    }

    std::set<std::string> atom_set;
    collect_atoms(f, atom_set);

    Nba nba;
    nba.atoms.assign(atom_set.begin(), atom_set.end());

    if (k == 0) {
        nba.num_states = int(states.size());
        nba.initial = gba_initial;
        nba.accepting.assign(states.size(), 1);
        for (int s = 0; s < int(states.size()); ++s)
            for (const auto& e : gba_edges[s])
                nba.edges.push_back(AutomatonEdge{s, e.label, e.target});
        return nba;
    }

    // Counter-based degeneralization: product states (q, level) with
    // level in 0..k; a transition advances through consecutively satisfied
    // sets starting at its level (level k restarts at 0); level k accepts.
    std::map<std::pair<int, int>, int> deg_index;
    std::vector<std::pair<int, int>> deg_states;
    auto intern_deg = [&](int q, int level) {
        auto it = deg_index.find({q, level});
        if (it != deg_index.end()) return it->second;
        const int id = int(deg_states.size());
        deg_index.emplace(std::make_pair(q, level), id);
        deg_states.emplace_back(q, level);
        return id;
    };

    nba.initial = intern_deg(gba_initial, 0);
    for (int s = 0; s < int(deg_states.size()); ++s) {
        const auto [q, level] = deg_states[s];
        for (const auto& e : gba_edges[q]) {
            int j = level == k ? 0 : level;
            while (j < k && ((e.satisfied >> j) & 1u)) ++j;
            nba.edges.push_back(AutomatonEdge{s, e.label, intern_deg(e.target, j)});
        }
    }
    nba.num_states = int(deg_states.size());
    nba.accepting.assign(deg_states.size(), 0);
    for (int s = 0; s < int(deg_states.size()); ++s)
        if (deg_states[s].second == k) nba.accepting[s] = 1;
    return nba;
}

UniversalCoBuchi ucw_from_nba(const Nba& nba) {
    UniversalCoBuchi ucw;
    ucw.num_states = nba.num_states;
    ucw.initial = nba.initial;
    ucw.edges = nba.edges;
    ucw.rejecting = nba.accepting;
    ucw.safety.assign(nba.num_states, 0);
    ucw.atoms = nba.atoms;
    return ucw;
}

UniversalCoBuchi build_ucw(const SynthesisProblem& problem) {
    const LtlPtr negated = nnf(combine(problem), /*negate=*/true);
    UniversalCoBuchi ucw = ucw_from_nba(ltl_to_nba(negated));
    // Labels range over the declared signals even when the formula does not
    // mention all of them.
    ucw.atoms.clear();
    ucw.atoms.insert(ucw.atoms.end(), problem.inputs.begin(), problem.inputs.end());
    ucw.atoms.insert(ucw.atoms.end(), problem.outputs.begin(), problem.outputs.end());
    return ucw;
}

}  // namespace bosy
