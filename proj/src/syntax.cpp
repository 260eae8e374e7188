#include "hmr/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "hmr/abstraction.hpp"
#include "hmr/error.hpp"

namespace hmr {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '#';
}

constexpr std::array<std::string_view, 3> kLongPunct{"<->", "->", ":="};
constexpr std::string_view kShortPunct = "()[]{},;:.=&|~\\*/";

// words that can never start a term
constexpr std::array<std::string_view, 5> kReserved{"in", "all", "ex", "bot", "BY"};

bool reserved(std::string_view w) { return std::find(kReserved.begin(), kReserved.end(), w) != kReserved.end(); }

std::optional<ConstKind> keyword(std::string_view w) {
    static constexpr std::array<std::pair<std::string_view, ConstKind>, 8> table{{
        {"PI", ConstKind::Pi},
        {"SIG", ConstKind::Sigma},
        {"SET", ConstKind::Sing},
        {"CUP", ConstKind::Cup},
        {"BIGCUP", ConstKind::BigCup},
        {"REC", ConstKind::Rec},
        {"ZERO", ConstKind::Zero},
        {"SUC", ConstKind::Suc},
    }};
    for (auto& [k, v] : table)
        if (k == w) return v;
    return std::nullopt;
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (text.substr(i, 2) == "//") {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        Token t{Tok::Punct, {}, line, col};
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j])) ++j;
            t.kind = Tok::Ident;
            t.text = std::string(text.substr(i, j - i));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            t.kind = Tok::Number;
            t.text = std::string(text.substr(i, j - i));
        } else {
            for (auto p : kLongPunct)
                if (text.substr(i, p.size()) == p) {
                    t.text = std::string(p);
                    break;
                }
            if (t.text.empty()) {
                if (kShortPunct.find(c) == std::string_view::npos)
                    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
                t.text = std::string(1, c);
            }
        }
        advance(t.text.size());
        out.push_back(std::move(t));
    }
    out.push_back(Token{Tok::End, {}, line, col});
    return out;
}

Parser::Parser(std::string_view text, Signature sig, Context ctx)
    : toks_(tokenize(text)), sig_(std::move(sig)), ctx_(std::move(ctx)) {}

// ---------------------------------------------------------------- token helpers

const Token& Parser::peek(std::size_t ahead) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

bool Parser::at(std::string_view text) const {
    const Token& t = peek();
    return t.kind != Tok::End && t.kind != Tok::Number && t.text == text;
}

bool Parser::accept(std::string_view text) {
    if (!at(text)) return false;
    ++pos_;
    return true;
}

void Parser::expect(std::string_view text) {
    if (!accept(text)) fail("expected '" + std::string(text) + "'");
}

std::string Parser::ident() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("expected an identifier");
    ++pos_;
    return t.text;
}

std::uint64_t Parser::number() {
    const Token& t = peek();
    if (t.kind != Tok::Number) fail("expected a number");
    ++pos_;
    try {
        return std::stoull(t.text);
    } catch (const std::exception&) {
        fail_at(t, "number out of range");
    }
}

void Parser::fail(const std::string& message) const { fail_at(peek(), message); }

void Parser::fail_at(const Token& t, const std::string& message) const {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, message + " (at " + found + ")");
}

// ---------------------------------------------------------------- header

void Parser::parse_header() {
    for (;;) {
        const Token& t = peek();
        if (t.kind != Tok::Ident) break;
        const Token& n = peek(1);
        const Token& after = peek(2);
        bool decl = (t.text == "mode" && n.kind == Tok::Ident) ||
                    (t.text == "const" && n.kind == Tok::Ident && after.text == ":") ||
                    ((t.text == "fun" || t.text == "rel") && n.kind == Tok::Ident && after.text == "/");
        if (decl) {
            signature_decl();
            accept(";");
            continue;
        }
        if (t.text == "context" && n.kind == Tok::Ident && after.text == ":") {
            ++pos_;
            do {
                const Token& at_var = peek();
                Var v = typed_var();
                if (ctx_.find(v.name)) fail_at(at_var, "duplicate context variable '" + v.name + "'");
                ctx_.add(v);
            } while (accept(","));
            expect(";");
            continue;
        }
        break;
    }
    try {
        sig_.validate();
    } catch (const TypeError& e) {
        fail(e.what());
    }
}

void Parser::signature_decl() {
    const Token& start = peek();
    std::string kw = ident();
    if (kw == "mode") {
        const Token& m = peek();
        std::string mode = ident();
        if (!sig_.functions().empty() || !sig_.relations().empty())
            fail_at(m, "mode must be declared before any symbol");
        if (mode == "logic")
            sig_ = Signature(Mode::Logic);
        else if (mode == "arithmetic")
            sig_ = Signature(Mode::Arithmetic);
        else
            fail_at(m, "unknown mode '" + mode + "'");
        return;
    }
    std::string name = ident();
    if (sig_.find_function(name) || sig_.find_relation(name) || keyword(name) || reserved(name))
        fail_at(start, "symbol '" + name + "' is already taken");
    if (kw == "const") {
        expect(":");
        const Token& tt = peek();
        Type t = type();
        if (t != sig_.ground()) fail_at(tt, "constants must have the ground type " + to_string(sig_.ground()));
        if (sig_.mode() == Mode::Arithmetic) fail_at(start, "arithmetic signatures take no first-order constants");
        sig_.add_function(name, 0);
        return;
    }
    expect("/");
    auto arity = static_cast<int>(number());
    if (kw == "fun") {
        if (sig_.mode() == Mode::Arithmetic) fail_at(start, "arithmetic signatures take no function symbols");
        sig_.add_function(name, arity);
    } else {
        sig_.add_relation(name, arity);
    }
}

// ---------------------------------------------------------------- types

Type Parser::type() {
    Type a = type_atom();
    if (accept("->")) return Type::arrow(a, type());
    return a;
}

Type Parser::type_atom() {
    Type t = Type::ground("?");
    if (accept("(")) {
        t = type();
        expect(")");
    } else {
        const Token& tok = peek();
        std::string name = ident();
        if (name != sig_.ground().ground_name())
            fail_at(tok, "unknown ground type '" + name + "' (this signature uses " + to_string(sig_.ground()) + ")");
        t = sig_.ground();
    }
    while (accept("*")) t = Type::star(t);
    return t;
}

Var Parser::typed_var() {
    const Token& tok = peek();
    std::string name = ident();
    if (reserved(name) || keyword(name)) fail_at(tok, "'" + name + "' is a keyword");
    expect(":");
    return Var{name, type()};
}

// ---------------------------------------------------------------- terms

const Var* Parser::lookup(const std::string& name) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
        if (it->name == name) return &*it;
    return ctx_.find(name);
}

bool Parser::term_start() const {
    const Token& t = peek();
    switch (t.kind) {
    case Tok::Number:
        return true;
    case Tok::Punct:
        return t.text == "(" || t.text == "\\";
    case Tok::Ident:
        return !reserved(t.text) && !sig_.find_relation(t.text);
    case Tok::End:
        return false;
    }
    return false;
}

Term Parser::term() { return application(); }

Term Parser::application() {
    if (at("\\")) {
        ++pos_;
        Var v = typed_var();
        expect(".");
        push_scope(v);
        Term body = term();
        pop_scope();
        return bracket(v, body);
    }
    Term f = primary();
    while (term_start()) {
        const Token& tok = peek();
        Term a = at("\\") ? application() : primary();
        try {
            f = Term::app(f, a);
        } catch (const TypeError& e) {
            fail_at(tok, e.what());
        }
    }
    return f;
}

Term Parser::primary() {
    const Token& tok = peek();
    if (tok.kind == Tok::Number) {
        if (sig_.mode() != Mode::Arithmetic) fail("numerals need arithmetic mode");
        return numeral(number());
    }
    if (accept("(")) {
        Term t = term();
        expect(")");
        return t;
    }
    if (tok.kind != Tok::Ident) fail("expected a term");
    std::string name = ident();
    if (auto k = keyword(name)) {
        std::vector<Type> ix;
        if (index_count(*k) > 0) {
            expect("[");
            do ix.push_back(type());
            while (accept(","));
            expect("]");
        }
        try {
            type_of_constant(*k, ix, sig_);
            return Term::constant(*k, ix);
        } catch (const TypeError& e) {
            fail_at(tok, e.what());
        }
    }
    if (reserved(name)) fail_at(tok, "unexpected keyword '" + name + "'");
    if (const Var* v = lookup(name)) return Term::var(*v);
    if (sig_.find_function(name)) return Term::user_constant(name, type_of_user_constant(name, sig_));
    if (sig_.find_relation(name)) fail_at(tok, "relation symbol '" + name + "' used as a term");
    fail_at(tok, "unbound variable '" + name + "'");
}

// ---------------------------------------------------------------- formulas

Formula Parser::formula() {
    if (at("all") || at("ex")) return quantifier();
    return implication();
}

Formula Parser::quantifier() {
    bool universal = ident() == "all";
    const Token& tok = peek();
    std::string name = ident();
    if (reserved(name) || keyword(name)) fail_at(tok, "'" + name + "' is a keyword");
    std::optional<Term> bound;
    Var v{name, sig_.ground()};
    if (accept(":")) {
        v.type = type();
    } else {
        expect("in");
        const Token& bt = peek();
        bound = term();
        if (!bound->type().is_star())
            fail_at(bt, "bound of '" + name + "' must have a star type, got " + to_string(bound->type()));
        v.type = bound->type().element();
    }
    expect(".");
    push_scope(v);
    Formula body = formula();
    pop_scope();
    if (bound) return universal ? Formula::bforall(v, *bound, body) : Formula::bexists(v, *bound, body);
    return universal ? Formula::forall(v, body) : Formula::exists(v, body);
}

Formula Parser::implication() {
    Formula l = disjunction();
    if (accept("->")) return Formula::imp(l, formula());
    if (accept("<->")) return Formula::iff(l, formula());
    return l;
}

Formula Parser::disjunction() {
    Formula l = conjunction();
    while (accept("|")) l = Formula::disj(l, conjunction());
    return l;
}

Formula Parser::conjunction() {
    Formula l = unary();
    while (accept("&")) l = Formula::conj(l, unary());
    return l;
}

Formula Parser::unary() {
    if (accept("~")) {
        if (at("all") || at("ex")) return Formula::neg(quantifier());
        return Formula::neg(unary());
    }
    return atom();
}

Formula Parser::atom() {
    if (accept("bot")) return Formula::bot();
    const Token& tok = peek();
    if (tok.kind == Tok::Ident && sig_.find_relation(tok.text) && peek(1).text == "(") {
        std::string name = ident();
        expect("(");
        std::vector<Term> args;
        if (!at(")")) {
            do args.push_back(term());
            while (accept(","));
        }
        expect(")");
        return Formula::rel(name, std::move(args));
    }
    std::optional<Term> lhs;
    if (at("(")) {
        std::size_t m = mark();
        try {
            Term t = term();
            if (at("=") || at("in")) lhs = t;
        } catch (const ParseError&) {
        }
        if (!lhs) {
            reset(m);
            expect("(");
            Formula f = formula();
            expect(")");
            return f;
        }
    } else {
        if (!term_start()) fail("expected a formula");
        lhs = term();
    }
    bool eq = accept("=");
    if (!eq && !accept("in")) fail("expected '=' or 'in' after term");
    Term rhs = term();
    expect(":");
    Type rho = type_atom();
    return eq ? Formula::eq(rho, *lhs, rhs) : Formula::mem(rho, *lhs, rhs);
}

// ---------------------------------------------------------------- whole inputs

namespace {

void finish(const Parser& p) {
    if (!p.at_end()) p.fail("unexpected trailing input");
}

} // namespace

Type parse_type(std::string_view text, const Signature& sig) {
    Parser p(text, sig);
    Type t = p.type();
    finish(p);
    return t;
}

Term parse_term(std::string_view text, const Signature& sig, const Context& ctx) {
    Parser p(text, sig, ctx);
    p.parse_header();
    Term t = p.term();
    finish(p);
    return t;
}

Formula parse_formula(std::string_view text, const Signature& sig, const Context& ctx) {
    Parser p(text, sig, ctx);
    p.parse_header();
    Formula f = p.formula();
    finish(p);
    return f;
}

Signature parse_signature(std::string_view text, Signature base) {
    Parser p(text, std::move(base));
    p.parse_header();
    finish(p);
    return p.signature();
}

std::string signature_text(const Signature& sig) {
    std::string out = sig.mode() == Mode::Logic ? "mode logic\n" : "mode arithmetic\n";
    for (auto& f : sig.functions()) {
        if (f.arity == 0)
            out += "const " + f.name + " : " + to_string(sig.ground()) + "\n";
        else
            out += "fun " + f.name + " / " + std::to_string(f.arity) + "\n";
    }
    for (auto& r : sig.relations()) out += "rel " + r.name + " / " + std::to_string(r.arity) + "\n";
    return out;
}

std::string context_text(const Context& ctx) {
    if (ctx.empty()) return {};
    std::string out = "context ";
    for (std::size_t i = 0; i < ctx.size(); ++i) {
        if (i) out += ", ";
        out += ctx.vars()[i].name + ":" + to_string(ctx.vars()[i].type);
    }
    return out + ";";
}

} // namespace hmr
