#include "bosy/prop.hpp"

#include <sstream>

#include "bosy/error.hpp"

namespace bosy {

namespace {

const PropPtr& true_singleton() {
    static const PropPtr t = Prop::constant(true);
    return t;
}

const PropPtr& false_singleton() {
    static const PropPtr f = Prop::constant(false);
    return f;
}

}  // namespace

PropPtr Prop::atom(std::string name) {
    return PropPtr(new Prop(PropKind::Atom, std::move(name), {}));
}

PropPtr Prop::constant(bool value) {
    return PropPtr(new Prop(value ? PropKind::True : PropKind::False, "", {}));
}

PropPtr Prop::negate(const PropPtr& p) {
    switch (p->kind()) {
        case PropKind::True: return false_singleton();
        case PropKind::False: return true_singleton();
        case PropKind::Not: return p->children()[0];
        default: return PropPtr(new Prop(PropKind::Not, "", {p}));
    }
}

PropPtr Prop::conj(const PropPtr& a, const PropPtr& b) {
    return conj_all({a, b});
}

PropPtr Prop::disj(const PropPtr& a, const PropPtr& b) {
    return disj_all({a, b});
}

PropPtr Prop::conj_all(std::vector<PropPtr> parts) {
    std::vector<PropPtr> kept;
    for (auto& p : parts) {
        if (p->kind() == PropKind::False) return false_singleton();
        if (p->kind() == PropKind::True) continue;
        kept.push_back(std::move(p));
    }
    if (kept.empty()) return true_singleton();
    if (kept.size() == 1) return kept[0];
    return PropPtr(new Prop(PropKind::And, "", std::move(kept)));
}

PropPtr Prop::disj_all(std::vector<PropPtr> parts) {
    std::vector<PropPtr> kept;
    for (auto& p : parts) {
        if (p->kind() == PropKind::True) return true_singleton();
        if (p->kind() == PropKind::False) continue;
        kept.push_back(std::move(p));
    }
    if (kept.empty()) return false_singleton();
    if (kept.size() == 1) return kept[0];
    return PropPtr(new Prop(PropKind::Or, "", std::move(kept)));
}

bool is_true(const PropPtr& p) { return p->kind() == PropKind::True; }
bool is_false(const PropPtr& p) { return p->kind() == PropKind::False; }

bool eval(const Prop& p, const std::function<bool(const std::string&)>& valuation) {
    switch (p.kind()) {
        case PropKind::Atom: return valuation(p.atom_name());
        case PropKind::True: return true;
        case PropKind::False: return false;
        case PropKind::Not: return !eval(*p.children()[0], valuation);
        case PropKind::And:
            for (const auto& c : p.children())
                if (!eval(*c, valuation)) return false;
            return true;
        case PropKind::Or:
            for (const auto& c : p.children())
                if (eval(*c, valuation)) return true;
            return false;
    }
    throw Error("corrupt propositional formula");
}

void collect_atoms(const Prop& p, std::set<std::string>& out) {
    if (p.kind() == PropKind::Atom) {
        out.insert(p.atom_name());
        return;
    }
    for (const auto& c : p.children()) collect_atoms(*c, out);
}

bool is_tautology(const PropPtr& p) {
    std::set<std::string> atom_set;
    collect_atoms(*p, atom_set);
    std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
    if (atoms.size() > 20)
        throw Error("tautology check limited to 20 distinct atoms");
    for (std::uint32_t bits = 0; bits < (1u << atoms.size()); ++bits) {
        auto valuation = [&](const std::string& name) {
            for (std::size_t k = 0; k < atoms.size(); ++k)
                if (atoms[k] == name) return ((bits >> k) & 1u) != 0;
            return false;
        };
        if (!eval(*p, valuation)) return false;
    }
    return true;
}

const PropSyntax kDefaultSyntax = {"true", "false", "!", " && ", " || "};
const PropSyntax kSmvSyntax = {"TRUE", "FALSE", "!", " & ", " | "};

namespace {

// precedence: Or = 1, And = 2, unary/atoms = 3
int precedence(PropKind k) {
    switch (k) {
        case PropKind::Or: return 1;
        case PropKind::And: return 2;
        default: return 3;
    }
}

void format_rec(const Prop& p, const PropSyntax& syn, int min_prec, std::ostringstream& out) {
    const int prec = precedence(p.kind());
    const bool parens = prec < min_prec;
    if (parens) out << '(';
    switch (p.kind()) {
        case PropKind::Atom: out << p.atom_name(); break;
        case PropKind::True: out << syn.true_text; break;
        case PropKind::False: out << syn.false_text; break;
        case PropKind::Not:
            out << syn.not_text;
            format_rec(*p.children()[0], syn, 3, out);
            break;
        case PropKind::And:
        case PropKind::Or: {
            const char* sep = p.kind() == PropKind::And ? syn.and_text : syn.or_text;
            for (std::size_t i = 0; i < p.children().size(); ++i) {
                if (i) out << sep;
                format_rec(*p.children()[i], syn, prec + 1, out);
            }
            break;
        }
    }
    if (parens) out << ')';
}

}  // namespace

std::string format(const PropPtr& p, const PropSyntax& syntax) {
    std::ostringstream out;
    format_rec(*p, syntax, 0, out);
    return out.str();
}

std::string format_conjunct(const PropPtr& p, const PropSyntax& syntax) {
    std::ostringstream out;
    format_rec(*p, syntax, 2, out);
    return out.str();
}

std::string to_string(const PropPtr& p) { return format(p, kDefaultSyntax); }

}  // namespace bosy
