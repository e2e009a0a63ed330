#include "bosy/logic.hpp"

#include <algorithm>
#include <unordered_map>

#include "bosy/error.hpp"

namespace bosy {

BoundedNat BoundedNat::allocate(VarRegistry& registry, std::uint32_t capacity,
                                const std::string& meaning) {
    BoundedNat nat;
    nat.capacity = capacity;
    int width = 0;
    while ((1u << width) <= capacity) ++width;  // width = ceil(log2(capacity+1))
    for (int k = 0; k < width; ++k)
        nat.bits.push_back(registry.fresh(meaning + ".bit" + std::to_string(k)));
    return nat;
}

namespace {

const TermPtr& term_true() {
    static const TermPtr t = Term::constant(true);
    return t;
}

const TermPtr& term_false() {
    static const TermPtr f = Term::constant(false);
    return f;
}

// literal view: var id with sign, 0 when the term is not a literal
int as_literal(const TermPtr& t) {
    if (t->kind() == TermKind::Var) return t->var();
    if (t->kind() == TermKind::Not && t->children()[0]->kind() == TermKind::Var)
        return -t->children()[0]->var();
    return 0;
}

}  // namespace

TermPtr Term::variable(int var) {
    if (var <= 0) throw Error("term variables are positive");
    return TermPtr(new Term(TermKind::Var, var, {}));
}

TermPtr Term::constant(bool value) {
    return TermPtr(new Term(value ? TermKind::True : TermKind::False, 0, {}));
}

TermPtr Term::negate(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::True: return term_false();
        case TermKind::False: return term_true();
        case TermKind::Not: return t->children()[0];
        default: return TermPtr(new Term(TermKind::Not, 0, {t}));
    }
}

TermPtr Term::conj(const TermPtr& a, const TermPtr& b) { return conj_all({a, b}); }
TermPtr Term::disj(const TermPtr& a, const TermPtr& b) { return disj_all({a, b}); }

TermPtr Term::conj_all(std::vector<TermPtr> parts) {
    std::vector<TermPtr> kept;
    std::vector<int> literals;
    for (auto& p : parts) {
        if (p->kind() == TermKind::False) return term_false();
        if (p->kind() == TermKind::True) continue;
        if (int lit = as_literal(p); lit != 0) {
            if (std::find(literals.begin(), literals.end(), lit) != literals.end())
                continue;  // duplicate literal
            if (std::find(literals.begin(), literals.end(), -lit) != literals.end())
                return term_false();  // complementary pair
            literals.push_back(lit);
        }
        kept.push_back(std::move(p));
    }
    if (kept.empty()) return term_true();
    if (kept.size() == 1) return kept[0];
    return TermPtr(new Term(TermKind::And, 0, std::move(kept)));
}

TermPtr Term::disj_all(std::vector<TermPtr> parts) {
    std::vector<TermPtr> kept;
    std::vector<int> literals;
    for (auto& p : parts) {
        if (p->kind() == TermKind::True) return term_true();
        if (p->kind() == TermKind::False) continue;
        if (int lit = as_literal(p); lit != 0) {
            if (std::find(literals.begin(), literals.end(), lit) != literals.end())
                continue;
            if (std::find(literals.begin(), literals.end(), -lit) != literals.end())
                return term_true();
            literals.push_back(lit);
        }
        kept.push_back(std::move(p));
    }
    if (kept.empty()) return term_false();
    if (kept.size() == 1) return kept[0];
    return TermPtr(new Term(TermKind::Or, 0, std::move(kept)));
}

TermPtr Term::implies(const TermPtr& a, const TermPtr& b) {
    // kept as disjunction; the dedicated node kind adds nothing downstream
    return disj(negate(a), b);
}

TermPtr Term::nat_compare(const BoundedNat& lhs, NatOp op, const BoundedNat& rhs) {
    return TermPtr(new Term(lhs, op, rhs));
}

bool is_true(const TermPtr& t) { return t->kind() == TermKind::True; }
bool is_false(const TermPtr& t) { return t->kind() == TermKind::False; }

namespace {

// bit k of a nat as a term (constants contribute constant bits)
TermPtr nat_bit(const BoundedNat& n, int k) {
    if (n.is_constant()) return Term::constant(((n.constant >> k) & 1u) != 0);
    if (k >= n.width()) return Term::constant(false);
    return Term::variable(n.bits[k]);
}

TermPtr bit_equal(const TermPtr& a, const TermPtr& b) {
    return Term::disj(Term::conj(a, b), Term::conj(Term::negate(a), Term::negate(b)));
}

// MSB-first ripple comparison; strict selects > over >=
TermPtr lower_ge(const BoundedNat& x, const BoundedNat& y, bool strict) {
    const int width = std::max(x.width(), y.width());
    TermPtr acc = Term::constant(!strict);  // result on equality
    for (int k = 0; k < width; ++k) {
        TermPtr xb = nat_bit(x, k);
        TermPtr yb = nat_bit(y, k);
        acc = Term::disj(Term::conj(xb, Term::negate(yb)),
                         Term::conj(bit_equal(xb, yb), acc));
    }
    return acc;
}

TermPtr lower_eq(const BoundedNat& x, const BoundedNat& y) {
    const int width = std::max(x.width(), y.width());
    std::vector<TermPtr> parts;
    for (int k = 0; k < width; ++k) parts.push_back(bit_equal(nat_bit(x, k), nat_bit(y, k)));
    return Term::conj_all(std::move(parts));
}

}  // namespace

TermPtr nat_at_most(const BoundedNat& nat, std::uint32_t bound) {
    if (nat.is_constant()) return Term::constant(nat.constant <= bound);
    if (nat.width() <= 31 && bound >= (1u << nat.width()) - 1u) return Term::constant(true);
    // le(k): comparison of bits k..0 given equality above k
    TermPtr acc = Term::constant(true);
    for (int k = 0; k < nat.width(); ++k) {
        TermPtr b = Term::variable(nat.bits[k]);
        if ((bound >> k) & 1u)
            acc = Term::disj(Term::negate(b), acc);
        else
            acc = Term::conj(Term::negate(b), acc);
    }
    return acc;
}

TermPtr lower_comparisons(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::Var:
        case TermKind::True:
        case TermKind::False:
            return t;
        case TermKind::Not:
            return Term::negate(lower_comparisons(t->children()[0]));
        case TermKind::And:
        case TermKind::Or: {
            std::vector<TermPtr> parts;
            parts.reserve(t->children().size());
            for (const auto& c : t->children()) parts.push_back(lower_comparisons(c));
            return t->kind() == TermKind::And ? Term::conj_all(std::move(parts))
                                              : Term::disj_all(std::move(parts));
        }
        case TermKind::Implies:
            return Term::implies(lower_comparisons(t->children()[0]),
                                 lower_comparisons(t->children()[1]));
        case TermKind::NatCmp:
            switch (t->nat_op()) {
                case NatOp::Ge: return lower_ge(t->lhs(), t->rhs(), false);
                case NatOp::Gt: return lower_ge(t->lhs(), t->rhs(), true);
                case NatOp::Eq: return lower_eq(t->lhs(), t->rhs());
            }
    }
    throw Error("corrupt logic term");
}

// ---------------------------------------------------------------------------
// Tseitin conversion. Shared subterms (by node identity) are translated once.

namespace {

class TseitinState {
public:
    TseitinState(VarRegistry& registry, Cnf& cnf) : registry_(registry), cnf_(cnf) {}

    // returns a DIMACS literal equivalent to t
    int literal(const TermPtr& t) {
        switch (t->kind()) {
            case TermKind::Var:
                return t->var();
            case TermKind::Not:
                return -literal(t->children()[0]);
            case TermKind::And:
            case TermKind::Or:
                break;
            default:
                throw Error("tseitin input must be quantifier- and comparison-free");
        }
        auto it = cache_.find(t.get());
        if (it != cache_.end()) return it->second;

        std::vector<int> child_lits;
        child_lits.reserve(t->children().size());
        for (const auto& c : t->children()) child_lits.push_back(literal(c));

        const int aux = registry_.fresh("tseitin");
        if (t->kind() == TermKind::And) {
            std::vector<int> big{aux};
            for (int lit : child_lits) {
                cnf_.clauses.push_back({-aux, lit});
                big.push_back(-lit);
            }
            cnf_.clauses.push_back(std::move(big));
        } else {
            std::vector<int> big{-aux};
            for (int lit : child_lits) {
                cnf_.clauses.push_back({aux, -lit});
                big.push_back(lit);
            }
            cnf_.clauses.push_back(std::move(big));
        }
        cache_.emplace(t.get(), aux);
        return aux;
    }

private:
    VarRegistry& registry_;
    Cnf& cnf_;
    std::unordered_map<const Term*, int> cache_;
};

}  // namespace

Cnf tseitin(const TermPtr& t, VarRegistry& registry) {
    Cnf cnf;
    if (is_true(t)) {
        cnf.num_vars = registry.count();
        return cnf;
    }
    if (is_false(t)) {
        cnf.clauses.push_back({});
        cnf.num_vars = registry.count();
        return cnf;
    }
    TseitinState state(registry, cnf);
    const int root = state.literal(t);
    cnf.clauses.push_back({root});
    cnf.num_vars = registry.count();
    return cnf;
}

QuantifiedCnf to_quantified_cnf(const QuantifiedProblem& p, VarRegistry& registry) {
    QuantifiedCnf out;
    const int before = registry.count();
    out.matrix = tseitin(lower_comparisons(p.matrix), registry);
    out.prefix = p.prefix;
    std::vector<int> aux;
    for (int v = before + 1; v <= registry.count(); ++v) aux.push_back(v);
    if (!aux.empty()) {
        if (!out.prefix.empty() && out.prefix.back().quant == Quant::Exists) {
            auto& vars = out.prefix.back().vars;
            vars.insert(vars.end(), aux.begin(), aux.end());
        } else {
            out.prefix.push_back(QuantBlock{Quant::Exists, std::move(aux)});
        }
    }
    return out;
}

bool eval_term(const TermPtr& t, const std::vector<bool>& assignment) {
    switch (t->kind()) {
        case TermKind::Var:
            return assignment.at(std::size_t(t->var()));
        case TermKind::True:
            return true;
        case TermKind::False:
            return false;
        case TermKind::Not:
            return !eval_term(t->children()[0], assignment);
        case TermKind::And:
            for (const auto& c : t->children())
                if (!eval_term(c, assignment)) return false;
            return true;
        case TermKind::Or:
            for (const auto& c : t->children())
                if (eval_term(c, assignment)) return true;
            return false;
        case TermKind::Implies:
            return !eval_term(t->children()[0], assignment) ||
                   eval_term(t->children()[1], assignment);
        case TermKind::NatCmp:
            throw Error("eval_term requires comparison-free input");
    }
    throw Error("corrupt logic term");
}

}  // namespace bosy
