#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hmr/formula.hpp"
#include "hmr/term.hpp"

namespace hmr {

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line = 1;
    int column = 1;
};

/// Splits source text into tokens. `//` starts a line comment. Identifiers
/// may contain letters, digits, `_`, `'` and `#` after the first character.
std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent parser over a token stream. Files start with an optional
/// header of signature declarations (`mode`, `const`, `fun`, `rel`) and an
/// optional `context x:T, ...;` line; the rest is read by the caller.
class Parser {
public:
    explicit Parser(std::string_view text, Signature sig = Signature::arithmetic(), Context ctx = {});

    void parse_header();
    const Signature& signature() const { return sig_; }
    const Context& context() const { return ctx_; }
    void set_context(Context ctx) { ctx_ = std::move(ctx); }

    Type type();
    /// A ground type or parenthesized type, followed by any number of `*`.
    Type type_atom();
    Term term();
    Formula formula();
    Var typed_var(); // name:type

    /// Variables in scope in addition to the context (innermost last).
    void push_scope(Var v) { scope_.push_back(std::move(v)); }
    void pop_scope() { scope_.pop_back(); }

    const Token& peek(std::size_t ahead = 0) const;
    bool at_end() const { return peek().kind == Tok::End; }
    bool at(std::string_view text) const;
    bool accept(std::string_view text);
    void expect(std::string_view text);
    std::string ident();
    std::uint64_t number();
    [[noreturn]] void fail(const std::string& message) const;
    [[noreturn]] void fail_at(const Token& t, const std::string& message) const;

    std::size_t mark() const { return pos_; }
    void reset(std::size_t m) { pos_ = m; }

private:
    bool term_start() const;
    Term application();
    Term primary();
    const Var* lookup(const std::string& name) const;
    Formula implication();
    Formula disjunction();
    Formula conjunction();
    Formula unary();
    Formula atom();
    Formula quantifier();
    void signature_decl();

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Signature sig_;
    Context ctx_;
    std::vector<Var> scope_;
};

/// Whole-input helpers: header, then exactly one item.
Type parse_type(std::string_view text, const Signature& sig = Signature::arithmetic());
Term parse_term(std::string_view text, const Signature& sig = Signature::arithmetic(), const Context& ctx = {});
Formula parse_formula(std::string_view text, const Signature& sig = Signature::arithmetic(),
                      const Context& ctx = {});
/// A file containing only declarations.
Signature parse_signature(std::string_view text, Signature base = Signature::arithmetic());

/// Declarations that reproduce `sig` when parsed.
std::string signature_text(const Signature& sig);
/// `context x:T, ...;` or empty for an empty context.
std::string context_text(const Context& ctx);

} // namespace hmr
