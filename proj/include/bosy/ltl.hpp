#pragma once

// LTL abstract syntax, the concrete-syntax parser, a printer that round-trips
// through the parser, and negation normal form.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace bosy {

enum class LtlKind : std::uint8_t {
    Atom,
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Next,       // X
    Until,      // U
    Release,    // R
    WeakUntil,  // W
    Eventually, // F
    Always,     // G
};

class Ltl;
using LtlPtr = std::shared_ptr<const Ltl>;

class Ltl {
public:
    LtlKind kind() const noexcept { return kind_; }
    const std::string& atom_name() const { return atom_; }
    const LtlPtr& left() const { return left_; }   // sole operand of unary nodes
    const LtlPtr& right() const { return right_; }

    static LtlPtr atom(std::string name);
    static LtlPtr constant(bool value);
    static LtlPtr unary(LtlKind op, LtlPtr operand);
    static LtlPtr binary(LtlKind op, LtlPtr lhs, LtlPtr rhs);

    static int arity(LtlKind k) noexcept;

private:
    Ltl(LtlKind kind, std::string atom, LtlPtr left, LtlPtr right)
        : kind_(kind), atom_(std::move(atom)), left_(std::move(left)), right_(std::move(right)) {}

    LtlKind kind_;
    std::string atom_;
    LtlPtr left_;
    LtlPtr right_;
};

bool equal(const LtlPtr& a, const LtlPtr& b);

// Minimal-parenthesis rendering; parse_ltl(to_string(f)) is structurally f.
std::string to_string(const LtlPtr& f);

// Grammar: atoms, true/false, prefix ! G F X, infix && || -> U R W,
// parentheses. Precedence unary > U/R/W > && > || > ->; the infix temporal
// operators and -> associate to the right, && and || to the left.
LtlPtr parse_ltl(std::string_view text);

// Negation normal form: negations pushed onto atoms, implications eliminated,
// W tableau-eliminated via  a W b == b R (a || b).  With negate set, returns
// the NNF of !f.
LtlPtr nnf(const LtlPtr& f, bool negate = false);

void collect_atoms(const LtlPtr& f, std::set<std::string>& out);

}  // namespace bosy
