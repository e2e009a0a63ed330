#pragma once

// Propositional formulas over named signals. Used for automaton edge labels,
// machine guards and output functions; temporal operators are excluded by
// construction.

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace bosy {

enum class PropKind : std::uint8_t { Atom, True, False, Not, And, Or };

class Prop;
using PropPtr = std::shared_ptr<const Prop>;

// Immutable n-ary formula node. Construction goes through the static
// factories, which fold constants (true && x == x, !!x == x, ...).
class Prop {
public:
    PropKind kind() const noexcept { return kind_; }
    const std::string& atom_name() const { return atom_; }
    const std::vector<PropPtr>& children() const { return children_; }

    static PropPtr atom(std::string name);
    static PropPtr constant(bool value);
    static PropPtr negate(const PropPtr& p);
    static PropPtr conj(const PropPtr& a, const PropPtr& b);
    static PropPtr disj(const PropPtr& a, const PropPtr& b);
    static PropPtr conj_all(std::vector<PropPtr> parts);
    static PropPtr disj_all(std::vector<PropPtr> parts);

private:
    Prop(PropKind kind, std::string atom, std::vector<PropPtr> children)
        : kind_(kind), atom_(std::move(atom)), children_(std::move(children)) {}

    PropKind kind_;
    std::string atom_;
    std::vector<PropPtr> children_;
};

bool is_true(const PropPtr& p);
bool is_false(const PropPtr& p);

// Evaluate under a valuation of the atoms.
bool eval(const Prop& p, const std::function<bool(const std::string&)>& valuation);
inline bool eval(const PropPtr& p, const std::function<bool(const std::string&)>& v) {
    return eval(*p, v);
}

void collect_atoms(const Prop& p, std::set<std::string>& out);

// True iff the formula evaluates to true under every assignment of the atoms
// that occur in it.
bool is_tautology(const PropPtr& p);

// Rendering. The syntax table allows the same tree to be printed in the
// native (&&/||), SMV (&/|) and DOT styles.
struct PropSyntax {
    const char* true_text;
    const char* false_text;
    const char* not_text;
    const char* and_text;
    const char* or_text;
};

extern const PropSyntax kDefaultSyntax;  // true/false, !, &&, ||
extern const PropSyntax kSmvSyntax;      // TRUE/FALSE, !, &, |

std::string format(const PropPtr& p, const PropSyntax& syntax);
// as format, but parenthesized when the formula would bind weaker than a
// surrounding conjunction
std::string format_conjunct(const PropPtr& p, const PropSyntax& syntax);
std::string to_string(const PropPtr& p);

}  // namespace bosy
