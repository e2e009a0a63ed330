#pragma once

// The logic representation the encoders target: propositional terms with
// boolean quantification and comparisons between bounded naturals, plus
// bit-blasting of the comparisons and Tseitin CNF conversion.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace bosy {

// Assigns consecutive positive integers in creation order and keeps a
// human-readable meaning per variable so solver models can be traced back to
// synthesis semantics.
class VarRegistry {
public:
    int fresh(std::string meaning) {
        meanings_.push_back(std::move(meaning));
        return int(meanings_.size());
    }

    int count() const noexcept { return int(meanings_.size()); }

    const std::string& meaning(int var) const { return meanings_.at(std::size_t(var) - 1); }

private:
    std::vector<std::string> meanings_;
};

// A natural number as little-endian bit variables with a capacity cap, or a
// plain constant (no bits). width == ceil(log2(capacity+1)).
struct BoundedNat {
    std::vector<int> bits;
    std::uint32_t constant = 0;
    std::uint32_t capacity = 0;

    bool is_constant() const noexcept { return bits.empty(); }
    int width() const noexcept { return int(bits.size()); }

    static BoundedNat constant_value(std::uint32_t v) { return BoundedNat{{}, v, v}; }
    static BoundedNat allocate(VarRegistry& registry, std::uint32_t capacity,
                               const std::string& meaning);
};

enum class TermKind : std::uint8_t { Var, True, False, Not, And, Or, Implies, NatCmp };
enum class NatOp : std::uint8_t { Ge, Gt, Eq };

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term; factories fold constants and complementary literal pairs so
// the lowered comparison formulas stay small.
class Term {
public:
    TermKind kind() const noexcept { return kind_; }
    int var() const noexcept { return var_; }
    const std::vector<TermPtr>& children() const { return children_; }
    const BoundedNat& lhs() const { return lhs_; }
    const BoundedNat& rhs() const { return rhs_; }
    NatOp nat_op() const noexcept { return op_; }

    static TermPtr variable(int var);
    static TermPtr constant(bool value);
    static TermPtr negate(const TermPtr& t);
    static TermPtr conj(const TermPtr& a, const TermPtr& b);
    static TermPtr disj(const TermPtr& a, const TermPtr& b);
    static TermPtr conj_all(std::vector<TermPtr> parts);
    static TermPtr disj_all(std::vector<TermPtr> parts);
    static TermPtr implies(const TermPtr& a, const TermPtr& b);
    static TermPtr nat_compare(const BoundedNat& lhs, NatOp op, const BoundedNat& rhs);

private:
    Term(TermKind kind, int var, std::vector<TermPtr> children)
        : kind_(kind), var_(var), children_(std::move(children)) {}
    Term(const BoundedNat& lhs, NatOp op, const BoundedNat& rhs)
        : kind_(TermKind::NatCmp), lhs_(lhs), rhs_(rhs), op_(op) {}

    TermKind kind_;
    int var_ = 0;
    std::vector<TermPtr> children_;
    BoundedNat lhs_, rhs_;
    NatOp op_ = NatOp::Ge;
};

bool is_true(const TermPtr& t);
bool is_false(const TermPtr& t);

// value <= bound over the nat's bit variables; true when the bound already
// covers the whole bit range.
TermPtr nat_at_most(const BoundedNat& nat, std::uint32_t bound);

// Replace every nat comparison by an equivalent pure-propositional formula
// (ripple comparison over the bits).
TermPtr lower_comparisons(const TermPtr& t);

struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS literals
};

// Equisatisfiable CNF with fresh auxiliaries from the registry; t must be
// quantifier-free and comparison-free. Models of the CNF restricted to the
// original variables satisfy t.
Cnf tseitin(const TermPtr& t, VarRegistry& registry);

enum class Quant : std::uint8_t { Exists, Forall };

struct QuantBlock {
    Quant quant;
    std::vector<int> vars;
};

struct QuantifiedProblem {
    std::vector<QuantBlock> prefix;  // every matrix variable bound exactly once
    TermPtr matrix;
};

// Prenex CNF form of a quantified problem: comparisons lowered, matrix
// Tseitin-converted, auxiliaries appended to the innermost existential block.
struct QuantifiedCnf {
    std::vector<QuantBlock> prefix;
    Cnf matrix;
};

QuantifiedCnf to_quantified_cnf(const QuantifiedProblem& p, VarRegistry& registry);

// Evaluate a comparison-free term under a full assignment (1-indexed).
bool eval_term(const TermPtr& t, const std::vector<bool>& assignment);

}  // namespace bosy
