#include "bosy/sat.hpp"

#include <algorithm>
#include <cmath>

#include "bosy/error.hpp"

namespace bosy {

namespace {

// literal encoding: lit = 2*var + sign, var 0-based, sign 1 = negated
inline int make_lit(int var0, bool neg) { return 2 * var0 + (neg ? 1 : 0); }
inline int lit_var(int lit) { return lit >> 1; }
inline bool lit_neg(int lit) { return lit & 1; }
inline int lit_flip(int lit) { return lit ^ 1; }

inline int from_dimacs(int lit) { return make_lit(std::abs(lit) - 1, lit < 0); }

constexpr int kNoReason = -1;

struct Clause {
    std::vector<int> lits;
    double activity = 0.0;
    int lbd = 0;
    bool learnt = false;
    bool deleted = false;
};

// luby(i), 1-based: 1 1 2 1 1 2 4 ...
std::int64_t luby(std::int64_t i) {
    std::int64_t k = 1;
    while ((1ll << k) - 1 < i) ++k;
    while ((1ll << k) - 1 != i) {
        --k;
        i -= (1ll << k) - 1;
    }
    return 1ll << (k - 1);
}

class Solver {
public:
    explicit Solver(const Cnf& cnf) : num_vars_(cnf.num_vars) {
        assigns_.assign(num_vars_, 0);
        level_.assign(num_vars_, 0);
        reason_.assign(num_vars_, kNoReason);
        activity_.assign(num_vars_, 0.0);
        phase_.assign(num_vars_, 0);
        seen_.assign(num_vars_, 0);
        watches_.assign(std::size_t(num_vars_) * 2, {});
        heap_index_.assign(num_vars_, -1);
        for (int v = 0; v < num_vars_; ++v) heap_insert(v);

        for (const auto& clause : cnf.clauses) {
            if (!ok_) break;
            add_clause(clause);
        }
    }

    SolveResult run() {
        SolveResult result;
        if (!ok_ || propagate() != kNoReason) return result;  // unsat at level 0

        std::int64_t restart_count = 0;
        std::int64_t conflicts_until_restart = 64 * luby(++restart_count);
        std::int64_t conflicts_since_reduce = 0;

        while (true) {
            const int conflict = propagate();
            if (conflict != kNoReason) {
                ++conflicts_since_reduce;
                --conflicts_until_restart;
                if (decision_level() == 0) return result;
                std::vector<int> learnt;
                int backtrack_level;
                int lbd;
                analyze(conflict, learnt, backtrack_level, lbd);
                cancel_until(backtrack_level);
                attach_learnt(std::move(learnt), lbd);
                decay_activities();
            } else {
                if (conflicts_until_restart <= 0 && decision_level() > 0) {
                    conflicts_until_restart = 64 * luby(++restart_count);
                    cancel_until(0);
                }
                if (conflicts_since_reduce >= 2000) {
                    conflicts_since_reduce = 0;
                    reduce_learnts();
                }
                const int var = pick_branch_var();
                if (var < 0) {
                    result.sat = true;
                    result.model = Model(num_vars_);
                    for (int v = 0; v < num_vars_; ++v)
                        result.model.set(v + 1, assigns_[v] > 0);
                    verify(result.model);
                    return result;
                }
                trail_lim_.push_back(int(trail_.size()));
                enqueue(make_lit(var, phase_[var] == 0), kNoReason);
            }
        }
    }

    const std::vector<std::vector<int>>* original_clauses() const { return &originals_; }

private:
    // ------------------------------------------------------------------ setup
    void add_clause(const std::vector<int>& dimacs_lits) {
        originals_.push_back(dimacs_lits);
        std::vector<int> lits;
        lits.reserve(dimacs_lits.size());
        for (int dl : dimacs_lits) lits.push_back(from_dimacs(dl));
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        for (std::size_t i = 0; i + 1 < lits.size(); ++i)
            if (lit_var(lits[i]) == lit_var(lits[i + 1])) return;  // tautology
        if (lits.empty()) {
            ok_ = false;
            return;
        }
        if (lits.size() == 1) {
            if (value(lits[0]) < 0) ok_ = false;
            else if (value(lits[0]) == 0) enqueue(lits[0], kNoReason);
            return;
        }
        const int id = int(clauses_.size());
        clauses_.push_back(Clause{std::move(lits), 0.0, 0, false, false});
        attach(id);
    }

    void attach(int id) {
        const auto& lits = clauses_[id].lits;
        watches_[std::size_t(lit_flip(lits[0]))].push_back(id);
        watches_[std::size_t(lit_flip(lits[1]))].push_back(id);
    }

    // ------------------------------------------------------------- assignment
    int value(int lit) const {  // +1 true, -1 false, 0 unassigned
        const int a = assigns_[lit_var(lit)];
        return lit_neg(lit) ? -a : a;
    }

    int decision_level() const { return int(trail_lim_.size()); }

    void enqueue(int lit, int reason) {
        const int v = lit_var(lit);
        assigns_[v] = lit_neg(lit) ? -1 : 1;
        level_[v] = decision_level();
        reason_[v] = reason;
        trail_.push_back(lit);
    }

    void cancel_until(int target_level) {
        if (decision_level() <= target_level) return;
        const int bound = trail_lim_[std::size_t(target_level)];
        for (int i = int(trail_.size()) - 1; i >= bound; --i) {
            const int v = lit_var(trail_[std::size_t(i)]);
            phase_[v] = assigns_[v] > 0 ? 1 : 0;
            assigns_[v] = 0;
            reason_[v] = kNoReason;
            if (heap_index_[v] < 0) heap_insert(v);
        }
        trail_.resize(std::size_t(bound));
        trail_lim_.resize(std::size_t(target_level));
        propagate_head_ = std::min(propagate_head_, int(trail_.size()));
    }

    // ------------------------------------------------------------ propagation
    int propagate() {
        while (propagate_head_ < int(trail_.size())) {
            const int lit = trail_[std::size_t(propagate_head_++)];
            // watched occurrences of ~lit: clauses where lit became false
            auto& watch_list = watches_[std::size_t(lit)];
            std::size_t keep = 0;
            for (std::size_t i = 0; i < watch_list.size(); ++i) {
                const int id = watch_list[i];
                Clause& clause = clauses_[id];
                if (clause.deleted) continue;  // dropped lazily
                auto& lits = clause.lits;
                const int false_lit = lit_flip(lit);
                if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
                if (value(lits[0]) > 0) {
                    watch_list[keep++] = id;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < lits.size(); ++k) {
                    if (value(lits[k]) >= 0) {
                        std::swap(lits[1], lits[k]);
                        watches_[std::size_t(lit_flip(lits[1]))].push_back(id);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                watch_list[keep++] = id;
                if (value(lits[0]) < 0) {
                    // conflict: keep remaining watches before reporting
                    for (++i; i < watch_list.size(); ++i) watch_list[keep++] = watch_list[i];
                    watch_list.resize(keep);
                    return id;
                }
                enqueue(lits[0], id);
            }
            watch_list.resize(keep);
        }
        return kNoReason;
    }

    // --------------------------------------------------------------- analysis
    void analyze(int conflict, std::vector<int>& learnt, int& backtrack_level, int& lbd) {
        learnt.clear();
        learnt.push_back(0);  // slot for the asserting literal
        int counter = 0;
        int lit = -1;
        int index = int(trail_.size()) - 1;
        int clause_id = conflict;

        while (true) {
            Clause& clause = clauses_[clause_id];
            if (clause.learnt) bump_clause(clause);
            for (std::size_t k = (lit == -1 ? 0 : 1); k < clause.lits.size(); ++k) {
                const int q = clause.lits[k];
                const int v = lit_var(q);
                if (seen_[v] || level_[v] == 0) continue;
                seen_[v] = 1;
                bump_var(v);
                if (level_[v] >= decision_level()) ++counter;
                else learnt.push_back(q);
            }
            // next literal to resolve on
            while (!seen_[lit_var(trail_[std::size_t(index)])]) --index;
            lit = trail_[std::size_t(index)];
            --index;
            const int v = lit_var(lit);
            seen_[v] = 0;
            --counter;
            if (counter == 0) break;
            clause_id = reason_[v];
            // move the resolved literal to the front slot convention
            Clause& reason_clause = clauses_[clause_id];
            if (reason_clause.lits[0] != lit) {
                auto it = std::find(reason_clause.lits.begin(), reason_clause.lits.end(), lit);
                std::iter_swap(reason_clause.lits.begin(), it);
            }
        }
        learnt[0] = lit_flip(lit);

        // conflict-clause minimization: drop literals implied by the rest
        std::vector<int> minimized{learnt[0]};
        for (std::size_t i = 1; i < learnt.size(); ++i)
            if (!redundant(learnt[i], learnt)) minimized.push_back(learnt[i]);
        learnt = std::move(minimized);

        backtrack_level = 0;
        if (learnt.size() > 1) {
            std::size_t max_i = 1;
            for (std::size_t i = 2; i < learnt.size(); ++i)
                if (level_[lit_var(learnt[i])] > level_[lit_var(learnt[max_i])]) max_i = i;
            std::swap(learnt[1], learnt[max_i]);
            backtrack_level = level_[lit_var(learnt[1])];
        }

        std::vector<int> levels;
        for (int q : learnt) levels.push_back(level_[lit_var(q)]);
        std::sort(levels.begin(), levels.end());
        lbd = int(std::unique(levels.begin(), levels.end()) - levels.begin());

        for (int q : learnt) seen_[lit_var(q)] = 0;
    }

    // local (non-recursive-minimization) redundancy: literal's reason clause
    // lies entirely within the learnt clause levels already marked seen
    bool redundant(int lit, const std::vector<int>& learnt) {
        const int v = lit_var(lit);
        if (reason_[v] == kNoReason) return false;
        for (int q : clauses_[reason_[v]].lits) {
            const int qv = lit_var(q);
            if (qv == v || level_[qv] == 0) continue;
            bool in_learnt = false;
            for (int l : learnt)
                if (lit_var(l) == qv) { in_learnt = true; break; }
            if (!in_learnt) return false;
        }
        return true;
    }

    void attach_learnt(std::vector<int> lits, int lbd) {
        if (lits.size() == 1) {
            cancel_until(0);
            if (value(lits[0]) < 0) { ok_ = false; return; }
            if (value(lits[0]) == 0) enqueue(lits[0], kNoReason);
            return;
        }
        const int id = int(clauses_.size());
        clauses_.push_back(Clause{std::move(lits), clause_inc_, lbd, true, false});
        ++num_learnts_;
        attach(id);
        enqueue(clauses_[id].lits[0], id);
    }

    void reduce_learnts() {
        std::vector<int> candidates;
        for (int id = 0; id < int(clauses_.size()); ++id) {
            const Clause& c = clauses_[id];
            if (!c.learnt || c.deleted || c.lits.size() <= 2 || c.lbd <= 3) continue;
            if (is_reason(id)) continue;
            candidates.push_back(id);
        }
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            if (clauses_[a].activity != clauses_[b].activity)
                return clauses_[a].activity < clauses_[b].activity;
            return a < b;
        });
        for (std::size_t i = 0; i < candidates.size() / 2; ++i)
            clauses_[candidates[i]].deleted = true;
        for (auto& c : clauses_)
            if (c.learnt && !c.deleted) c.activity /= 2.0;
    }

    bool is_reason(int id) const {
        const auto& lits = clauses_[id].lits;
        const int v = lit_var(lits[0]);
        return assigns_[v] != 0 && reason_[v] == id;
    }

    // --------------------------------------------------------------- activity
    void bump_var(int v) {
        activity_[v] += var_inc_;
        if (activity_[v] > 1e100) {
            for (auto& a : activity_) a *= 1e-100;
            var_inc_ *= 1e-100;
        }
        if (heap_index_[v] >= 0) heap_up(heap_index_[v]);
    }

    void bump_clause(Clause& c) {
        c.activity += clause_inc_;
        if (c.activity > 1e20) {
            for (auto& cl : clauses_)
                if (cl.learnt) cl.activity *= 1e-20;
            clause_inc_ *= 1e-20;
        }
    }

    void decay_activities() {
        var_inc_ /= 0.95;
        clause_inc_ /= 0.999;
    }

    // ------------------------------------------------- branching heap (VSIDS)
    bool heap_less(int a, int b) const {
        if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
        return a < b;  // deterministic tie-break on the lowest index
    }

    void heap_insert(int v) {
        heap_index_[v] = int(heap_.size());
        heap_.push_back(v);
        heap_up(heap_index_[v]);
    }

    void heap_up(int i) {
        const int v = heap_[std::size_t(i)];
        while (i > 0) {
            const int parent = (i - 1) / 2;
            if (!heap_less(v, heap_[std::size_t(parent)])) break;
            heap_[std::size_t(i)] = heap_[std::size_t(parent)];
            heap_index_[heap_[std::size_t(i)]] = i;
            i = parent;
        }
        heap_[std::size_t(i)] = v;
        heap_index_[v] = i;
    }

    void heap_down(int i) {
        const int v = heap_[std::size_t(i)];
        const int size = int(heap_.size());
        while (true) {
            int child = 2 * i + 1;
            if (child >= size) break;
            if (child + 1 < size && heap_less(heap_[std::size_t(child + 1)], heap_[std::size_t(child)]))
                ++child;
            if (!heap_less(heap_[std::size_t(child)], v)) break;
            heap_[std::size_t(i)] = heap_[std::size_t(child)];
            heap_index_[heap_[std::size_t(i)]] = i;
            i = child;
        }
        heap_[std::size_t(i)] = v;
        heap_index_[v] = i;
    }

    int heap_pop() {
        const int top = heap_[0];
        heap_index_[top] = -1;
        heap_[0] = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            heap_index_[heap_[0]] = 0;
            heap_down(0);
        }
        return top;
    }

    int pick_branch_var() {
        while (!heap_.empty()) {
            const int v = heap_pop();
            if (assigns_[v] == 0) return v;
        }
        return -1;
    }

    // ------------------------------------------------------------------ check
    void verify(const Model& model) const {
        for (const auto& clause : originals_) {
            bool satisfied = false;
            for (int lit : clause) {
                const int value = model.value(std::abs(lit));
                if ((lit > 0 && value > 0) || (lit < 0 && value < 0)) {
                    satisfied = true;
                    break;
                }
            }
            if (!satisfied) throw Error("internal: SAT model fails a clause");
        }
    }

    int num_vars_;
    bool ok_ = true;
    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> originals_;
    std::vector<std::vector<int>> watches_;
    std::vector<std::int8_t> assigns_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    int propagate_head_ = 0;
    std::vector<double> activity_;
    std::vector<std::int8_t> phase_;
    std::vector<std::int8_t> seen_;
    std::vector<int> heap_;
    std::vector<int> heap_index_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    std::int64_t num_learnts_ = 0;
};

}  // namespace

SolveResult solve_cnf(const Cnf& cnf) {
    Solver solver(cnf);
    return solver.run();
}

}  // namespace bosy
