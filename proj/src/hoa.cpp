#include "bosy/hoa.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "bosy/error.hpp"

namespace bosy {

namespace {

struct HoaToken {
    enum Kind { HeaderName, Ident, Int, String, LBracket, RBracket, LBrace, RBrace,
                LParen, RParen, Bang, Amp, Pipe, BodyMarker, EndMarker, End } kind;
    std::string text;
    long value = 0;
    std::size_t pos = 0;
};

class HoaLexer {
public:
    explicit HoaLexer(std::string_view text) : text_(text) { advance(); }

    const HoaToken& peek() const { return current_; }

    HoaToken next() {
        HoaToken t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space_and_comments();
        current_.pos = i_;
        if (i_ >= text_.size()) {
            current_ = {HoaToken::End, "", 0, i_};
            return;
        }
        const char c = text_[i_];
        switch (c) {
            case '[': current_ = {HoaToken::LBracket, "[", 0, i_++}; return;
            case ']': current_ = {HoaToken::RBracket, "]", 0, i_++}; return;
            case '{': current_ = {HoaToken::LBrace, "{", 0, i_++}; return;
            case '}': current_ = {HoaToken::RBrace, "}", 0, i_++}; return;
            case '(': current_ = {HoaToken::LParen, "(", 0, i_++}; return;
            case ')': current_ = {HoaToken::RParen, ")", 0, i_++}; return;
            case '!': current_ = {HoaToken::Bang, "!", 0, i_++}; return;
            case '&': current_ = {HoaToken::Amp, "&", 0, i_++}; return;
            case '|': current_ = {HoaToken::Pipe, "|", 0, i_++}; return;
            default: break;
        }
        if (c == '"') {
            std::size_t start = i_++;
            std::string s;
            while (i_ < text_.size() && text_[i_] != '"') {
                if (text_[i_] == '\\' && i_ + 1 < text_.size()) ++i_;
                s += text_[i_++];
            }
            if (i_ >= text_.size()) throw ParseError("unterminated string", start);
            ++i_;
            current_ = {HoaToken::String, std::move(s), 0, start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            long v = 0;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                v = v * 10 + (text_[i_++] - '0');
            current_ = {HoaToken::Int, text_.substr(start, i_ - start).empty()
                                           ? std::string()
                                           : std::string(text_.substr(start, i_ - start)),
                        v, start};
            return;
        }
        if (c == '-' && text_.substr(i_).rfind("--BODY--", 0) == 0) {
            current_ = {HoaToken::BodyMarker, "--BODY--", 0, i_};
            i_ += 8;
            return;
        }
        if (c == '-' && text_.substr(i_).rfind("--END--", 0) == 0) {
            current_ = {HoaToken::EndMarker, "--END--", 0, i_};
            i_ += 7;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@') {
            std::size_t start = i_;
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_' ||
                    text_[i_] == '-' || text_[i_] == '@'))
                ++i_;
            std::string word(text_.substr(start, i_ - start));
            if (i_ < text_.size() && text_[i_] == ':') {
                ++i_;
                current_ = {HoaToken::HeaderName, std::move(word), 0, start};
                return;
            }
            current_ = {HoaToken::Ident, std::move(word), 0, start};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in HOA input", i_);
    }

    void skip_space_and_comments() {
        while (i_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[i_]))) {
                ++i_;
            } else if (text_.substr(i_).rfind("/*", 0) == 0) {
                const auto end = text_.find("*/", i_ + 2);
                if (end == std::string_view::npos)
                    throw ParseError("unterminated comment", i_);
                i_ = end + 2;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    HoaToken current_;
};

class HoaParser {
public:
    HoaParser(std::string_view text, const std::optional<std::vector<std::string>>& valid_atoms)
        : lexer_(text), valid_atoms_(valid_atoms) {}

    UniversalCoBuchi parse() {
        parse_header();
        parse_body();
        finish();
        return std::move(result_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("HOA: " + msg);
    }

    HoaToken expect(HoaToken::Kind kind, const char* what) {
        if (lexer_.peek().kind != kind) fail(std::string("expected ") + what);
        return lexer_.next();
    }

    void skip_header_arguments() {
        // consume everything up to the next header name or --BODY--
        while (true) {
            const auto k = lexer_.peek().kind;
            if (k == HoaToken::HeaderName || k == HoaToken::BodyMarker || k == HoaToken::End)
                return;
            lexer_.next();
        }
    }

    void parse_header() {
        const HoaToken fmt = expect(HoaToken::HeaderName, "HOA: header");
        if (fmt.text != "HOA") fail("document does not start with HOA:");
        const HoaToken version = expect(HoaToken::Ident, "format version");
        if (version.text != "v1") fail("unsupported version " + version.text);

        while (lexer_.peek().kind == HoaToken::HeaderName) {
            const HoaToken h = lexer_.next();
            if (h.text == "States") {
                num_states_ = int(expect(HoaToken::Int, "state count").value);
            } else if (h.text == "Start") {
                if (seen_start_) fail("unsupported: multiple initial states");
                initial_ = int(expect(HoaToken::Int, "initial state").value);
                seen_start_ = true;
                if (lexer_.peek().kind == HoaToken::Amp)
                    fail("unsupported: conjunction of initial states (alternation)");
                if (lexer_.peek().kind == HoaToken::Int)
                    fail("unsupported: multiple initial states");
            } else if (h.text == "AP") {
                const int n = int(expect(HoaToken::Int, "AP count").value);
                for (int i = 0; i < n; ++i)
                    aps_.push_back(expect(HoaToken::String, "AP name").text);
            } else if (h.text == "Acceptance") {
                const int sets = int(expect(HoaToken::Int, "acceptance set count").value);
                if (sets > 1) fail("unsupported acceptance (expected at most one Buchi set)");
                acceptance_sets_ = sets;
                if (sets == 1) {
                    const HoaToken inf = expect(HoaToken::Ident, "Inf");
                    if (inf.text != "Inf") fail("unsupported acceptance (expected Inf(0))");
                    expect(HoaToken::LParen, "(");
                    if (expect(HoaToken::Int, "set index").value != 0)
                        fail("unsupported acceptance (expected Inf(0))");
                    expect(HoaToken::RParen, ")");
                } else {
                    skip_header_arguments();  // "0 f" / "0 t"
                }
            } else if (h.text == "Alias") {
                fail("unsupported feature: aliases");
            } else if (h.text == "acc-name" || h.text == "name" || h.text == "tool" ||
                       h.text == "properties" || h.text == "owner") {
                skip_header_arguments();
            } else {
                // unknown headers starting with an uppercase letter change
                // semantics per the format definition
                if (!h.text.empty() && std::isupper(static_cast<unsigned char>(h.text[0])))
                    fail("unsupported header " + h.text + ":");
                skip_header_arguments();
            }
        }

        if (acceptance_sets_ < 0) fail("missing Acceptance: header");
        if (num_states_ < 0) fail("missing States: header");
        if (!seen_start_) fail("missing Start: header");
        if (initial_ < 0 || initial_ >= num_states_) fail("initial state out of range");

        if (valid_atoms_) {
            for (const auto& ap : aps_)
                if (std::find(valid_atoms_->begin(), valid_atoms_->end(), ap) ==
                    valid_atoms_->end())
                    fail("unknown AP \"" + ap + "\"");
        }

        result_.num_states = num_states_;
        result_.initial = initial_;
        result_.rejecting.assign(num_states_, 0);
        result_.safety.assign(num_states_, 0);
        result_.atoms = valid_atoms_ ? *valid_atoms_ : aps_;
    }

    PropPtr parse_label_disj() {
        PropPtr f = parse_label_conj();
        while (lexer_.peek().kind == HoaToken::Pipe) {
            lexer_.next();
            f = Prop::disj(f, parse_label_conj());
        }
        return f;
    }

    PropPtr parse_label_conj() {
        PropPtr f = parse_label_atom();
        while (lexer_.peek().kind == HoaToken::Amp) {
            lexer_.next();
            f = Prop::conj(f, parse_label_atom());
        }
        return f;
    }

    PropPtr parse_label_atom() {
        const HoaToken t = lexer_.next();
        switch (t.kind) {
            case HoaToken::Bang:
                return Prop::negate(parse_label_atom());
            case HoaToken::LParen: {
                PropPtr f = parse_label_disj();
                expect(HoaToken::RParen, ")");
                return f;
            }
            case HoaToken::Int:
                if (t.value < 0 || t.value >= long(aps_.size()))
                    fail("AP index out of range in label");
                return Prop::atom(aps_[t.value]);
            case HoaToken::Ident:
                if (t.text == "t") return Prop::constant(true);
                if (t.text == "f") return Prop::constant(false);
                fail("unexpected token in label: " + t.text);
            default:
                fail("malformed edge label");
        }
        return nullptr;  // unreachable
    }

    void parse_body() {
        expect(HoaToken::BodyMarker, "--BODY--");
        int current = -1;
        while (lexer_.peek().kind != HoaToken::EndMarker) {
            if (lexer_.peek().kind == HoaToken::End) fail("missing --END--");
            if (lexer_.peek().kind == HoaToken::HeaderName && lexer_.peek().text == "State") {
                lexer_.next();
                if (lexer_.peek().kind == HoaToken::LBracket)
                    fail("unsupported: state-labeled automata");
                current = int(expect(HoaToken::Int, "state index").value);
                if (current < 0 || current >= num_states_) fail("state index out of range");
                if (lexer_.peek().kind == HoaToken::String) lexer_.next();  // state name
                if (lexer_.peek().kind == HoaToken::LBrace) {
                    lexer_.next();
                    while (lexer_.peek().kind == HoaToken::Int) {
                        if (lexer_.next().value == 0) result_.rejecting[current] = 1;
                        else fail("acceptance mark out of range");
                    }
                    expect(HoaToken::RBrace, "}");
                    if (acceptance_sets_ == 0 && result_.rejecting[current])
                        fail("acceptance mark with Acceptance: 0");
                }
                continue;
            }
            if (lexer_.peek().kind == HoaToken::LBracket) {
                if (current < 0) fail("edge before first State:");
                lexer_.next();
                PropPtr label = parse_label_disj();
                expect(HoaToken::RBracket, "]");
                const int target = int(expect(HoaToken::Int, "edge target").value);
                if (target < 0 || target >= num_states_) fail("edge target out of range");
                if (lexer_.peek().kind == HoaToken::Amp)
                    fail("unsupported: universal branching (alternation)");
                if (lexer_.peek().kind == HoaToken::LBrace)
                    fail("unsupported: transition-based acceptance");
                result_.edges.push_back(AutomatonEdge{current, std::move(label), target});
                continue;
            }
            if (lexer_.peek().kind == HoaToken::Int && current >= 0)
                fail("unsupported: implicit edge labels");
            fail("unexpected token in automaton body");
        }
        lexer_.next();  // --END--
    }

    void finish() {
        if (lexer_.peek().kind != HoaToken::End) fail("trailing input after --END--");
    }

    HoaLexer lexer_;
    const std::optional<std::vector<std::string>>& valid_atoms_;
    UniversalCoBuchi result_;
    std::vector<std::string> aps_;
    int num_states_ = -1;
    int initial_ = -1;
    bool seen_start_ = false;
    int acceptance_sets_ = -1;
};

}  // namespace

UniversalCoBuchi parse_hoa(std::string_view text,
                           const std::optional<std::vector<std::string>>& valid_atoms) {
    return HoaParser(text, valid_atoms).parse();
}

}  // namespace bosy
