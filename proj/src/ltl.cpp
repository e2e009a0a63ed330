#include "bosy/ltl.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "bosy/error.hpp"

namespace bosy {

LtlPtr Ltl::atom(std::string name) {
    return LtlPtr(new Ltl(LtlKind::Atom, std::move(name), nullptr, nullptr));
}

LtlPtr Ltl::constant(bool value) {
    return LtlPtr(new Ltl(value ? LtlKind::True : LtlKind::False, "", nullptr, nullptr));
}

LtlPtr Ltl::unary(LtlKind op, LtlPtr operand) {
    if (arity(op) != 1) throw Error("unary() called with non-unary operator");
    return LtlPtr(new Ltl(op, "", std::move(operand), nullptr));
}

LtlPtr Ltl::binary(LtlKind op, LtlPtr lhs, LtlPtr rhs) {
    if (arity(op) != 2) throw Error("binary() called with non-binary operator");
    return LtlPtr(new Ltl(op, "", std::move(lhs), std::move(rhs)));
}

int Ltl::arity(LtlKind k) noexcept {
    switch (k) {
        case LtlKind::Atom:
        case LtlKind::True:
        case LtlKind::False:
            return 0;
        case LtlKind::Not:
        case LtlKind::Next:
        case LtlKind::Eventually:
        case LtlKind::Always:
            return 1;
        default:
            return 2;
    }
}

bool equal(const LtlPtr& a, const LtlPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (Ltl::arity(a->kind())) {
        case 0:
            return a->kind() != LtlKind::Atom || a->atom_name() == b->atom_name();
        case 1:
            return equal(a->left(), b->left());
        default:
            return equal(a->left(), b->left()) && equal(a->right(), b->right());
    }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// -> : 1 (right), || : 2 (left), && : 3 (left), U/R/W : 4 (right), unary : 5
int ltl_precedence(LtlKind k) {
    switch (k) {
        case LtlKind::Implies: return 1;
        case LtlKind::Or: return 2;
        case LtlKind::And: return 3;
        case LtlKind::Until:
        case LtlKind::Release:
        case LtlKind::WeakUntil: return 4;
        default: return 5;
    }
}

const char* infix_symbol(LtlKind k) {
    switch (k) {
        case LtlKind::Implies: return "->";
        case LtlKind::Or: return "||";
        case LtlKind::And: return "&&";
        case LtlKind::Until: return "U";
        case LtlKind::Release: return "R";
        case LtlKind::WeakUntil: return "W";
        default: return "?";
    }
}

void print_rec(const LtlPtr& f, int min_prec, std::ostringstream& out) {
    const int prec = ltl_precedence(f->kind());
    const bool parens = prec < min_prec;
    if (parens) out << '(';
    switch (f->kind()) {
        case LtlKind::Atom: out << f->atom_name(); break;
        case LtlKind::True: out << "true"; break;
        case LtlKind::False: out << "false"; break;
        case LtlKind::Not:
            out << '!';
            print_rec(f->left(), 5, out);
            break;
        case LtlKind::Next:
        case LtlKind::Eventually:
        case LtlKind::Always:
            out << (f->kind() == LtlKind::Next ? "X " : f->kind() == LtlKind::Eventually ? "F " : "G ");
            print_rec(f->left(), 5, out);
            break;
        case LtlKind::Implies:
            print_rec(f->left(), 2, out);
            out << " -> ";
            print_rec(f->right(), 1, out);
            break;
        case LtlKind::Or:
        case LtlKind::And: {
            // left-associative: equal precedence allowed on the left only
            print_rec(f->left(), prec, out);
            out << ' ' << infix_symbol(f->kind()) << ' ';
            print_rec(f->right(), prec + 1, out);
            break;
        }
        case LtlKind::Until:
        case LtlKind::Release:
        case LtlKind::WeakUntil:
            // right-associative
            print_rec(f->left(), 5, out);
            out << ' ' << infix_symbol(f->kind()) << ' ';
            print_rec(f->right(), 4, out);
            break;
    }
    if (parens) out << ')';
}

}  // namespace

std::string to_string(const LtlPtr& f) {
    std::ostringstream out;
    print_rec(f, 0, out);
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok : std::uint8_t { LParen, RParen, Bang, AndAnd, OrOr, Arrow, Word, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(') { out.push_back({Tok::LParen, "(", i}); ++i; continue; }
        if (c == ')') { out.push_back({Tok::RParen, ")", i}); ++i; continue; }
        if (c == '!') { out.push_back({Tok::Bang, "!", i}); ++i; continue; }
        if (c == '&') {
            if (i + 1 >= text.size() || text[i + 1] != '&')
                throw ParseError("expected '&&'", i);
            out.push_back({Tok::AndAnd, "&&", i});
            i += 2;
            continue;
        }
        if (c == '|') {
            if (i + 1 >= text.size() || text[i + 1] != '|')
                throw ParseError("expected '||'", i);
            out.push_back({Tok::OrOr, "||", i});
            i += 2;
            continue;
        }
        if (c == '-') {
            if (i + 1 >= text.size() || text[i + 1] != '>')
                throw ParseError("expected '->'", i);
            out.push_back({Tok::Arrow, "->", i});
            i += 2;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Tok::Word, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

class ParserState {
public:
    explicit ParserState(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    LtlPtr parse() {
        LtlPtr f = parse_implies();
        if (peek().kind != Tok::End)
            throw ParseError("trailing input after formula", peek().pos);
        return f;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    Token advance() { return tokens_[index_++]; }

    bool is_word(const char* w) const {
        return peek().kind == Tok::Word && peek().text == w;
    }

    LtlPtr parse_implies() {
        LtlPtr lhs = parse_or();
        if (peek().kind == Tok::Arrow) {
            advance();
            return Ltl::binary(LtlKind::Implies, std::move(lhs), parse_implies());
        }
        return lhs;
    }

    LtlPtr parse_or() {
        LtlPtr f = parse_and();
        while (peek().kind == Tok::OrOr) {
            advance();
            f = Ltl::binary(LtlKind::Or, std::move(f), parse_and());
        }
        return f;
    }

    LtlPtr parse_and() {
        LtlPtr f = parse_temporal();
        while (peek().kind == Tok::AndAnd) {
            advance();
            f = Ltl::binary(LtlKind::And, std::move(f), parse_temporal());
        }
        return f;
    }

    LtlPtr parse_temporal() {
        LtlPtr lhs = parse_unary();
        if (is_word("U") || is_word("R") || is_word("W")) {
            const LtlKind op = peek().text == "U"   ? LtlKind::Until
                               : peek().text == "R" ? LtlKind::Release
                                                    : LtlKind::WeakUntil;
            advance();
            return Ltl::binary(op, std::move(lhs), parse_temporal());
        }
        return lhs;
    }

    LtlPtr parse_unary() {
        if (peek().kind == Tok::Bang) {
            advance();
            return Ltl::unary(LtlKind::Not, parse_unary());
        }
        if (is_word("G") || is_word("F") || is_word("X")) {
            const LtlKind op = peek().text == "G"   ? LtlKind::Always
                               : peek().text == "F" ? LtlKind::Eventually
                                                    : LtlKind::Next;
            advance();
            return Ltl::unary(op, parse_unary());
        }
        return parse_primary();
    }

    LtlPtr parse_primary() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            advance();
            LtlPtr f = parse_implies();
            if (peek().kind != Tok::RParen)
                throw ParseError("expected ')'", peek().pos);
            advance();
            return f;
        }
        if (t.kind == Tok::Word) {
            if (t.text == "true") { advance(); return Ltl::constant(true); }
            if (t.text == "false") { advance(); return Ltl::constant(false); }
            if (t.text == "U" || t.text == "R" || t.text == "W")
                throw ParseError("'" + t.text + "' is an operator, not an atom", t.pos);
            return Ltl::atom(advance().text);
        }
        throw ParseError("expected formula", t.pos);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

LtlPtr parse_ltl(std::string_view text) {
    return ParserState(lex(text)).parse();
}

// ---------------------------------------------------------------------------
// Negation normal form

LtlPtr nnf(const LtlPtr& f, bool negate) {
    switch (f->kind()) {
        case LtlKind::Atom:
            return negate ? Ltl::unary(LtlKind::Not, f) : f;
        case LtlKind::True:
            return Ltl::constant(!negate);
        case LtlKind::False:
            return Ltl::constant(negate);
        case LtlKind::Not:
            return nnf(f->left(), !negate);
        case LtlKind::And:
            return Ltl::binary(negate ? LtlKind::Or : LtlKind::And,
                               nnf(f->left(), negate), nnf(f->right(), negate));
        case LtlKind::Or:
            return Ltl::binary(negate ? LtlKind::And : LtlKind::Or,
                               nnf(f->left(), negate), nnf(f->right(), negate));
        case LtlKind::Implies:
            // a -> b == !a || b
            if (negate)
                return Ltl::binary(LtlKind::And, nnf(f->left(), false), nnf(f->right(), true));
            return Ltl::binary(LtlKind::Or, nnf(f->left(), true), nnf(f->right(), false));
        case LtlKind::Next:
            return Ltl::unary(LtlKind::Next, nnf(f->left(), negate));
        case LtlKind::Until:
            return Ltl::binary(negate ? LtlKind::Release : LtlKind::Until,
                               nnf(f->left(), negate), nnf(f->right(), negate));
        case LtlKind::Release:
            return Ltl::binary(negate ? LtlKind::Until : LtlKind::Release,
                               nnf(f->left(), negate), nnf(f->right(), negate));
        case LtlKind::WeakUntil:
            // a W b == b R (a || b)
            return nnf(Ltl::binary(LtlKind::Release, f->right(),
                                   Ltl::binary(LtlKind::Or, f->left(), f->right())),
                       negate);
        case LtlKind::Eventually:
            return Ltl::unary(negate ? LtlKind::Always : LtlKind::Eventually,
                              nnf(f->left(), negate));
        case LtlKind::Always:
            return Ltl::unary(negate ? LtlKind::Eventually : LtlKind::Always,
                              nnf(f->left(), negate));
    }
    throw Error("corrupt LTL formula");
}

void collect_atoms(const LtlPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind() == LtlKind::Atom) {
        out.insert(f->atom_name());
        return;
    }
    collect_atoms(f->left(), out);
    collect_atoms(f->right(), out);
}

}  // namespace bosy
