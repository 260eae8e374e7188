#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hmr/type.hpp"

namespace hmr {

enum class Mode { Logic, Arithmetic };

/// Built-in constants. `User` covers the constants and function symbols of
/// the first-order signature.
enum class ConstKind { Pi, Sigma, Sing, Cup, BigCup, Rec, Zero, Suc, User };

struct FunSymbol {
    std::string name;
    int arity = 0;
};

struct RelSymbol {
    std::string name;
    int arity = 0;
};

/// First-order signature plus the mode flag selecting pure logic (ground type
/// `G`) or arithmetic (ground type `N`, with 0, S and the recursors).
class Signature {
public:
    Signature() = default;
    explicit Signature(Mode mode) : mode_(mode) {}

    static Signature arithmetic() { return Signature(Mode::Arithmetic); }

    Mode mode() const { return mode_; }
    Type ground() const;

    void add_function(std::string name, int arity);
    void add_relation(std::string name, int arity);

    const std::vector<FunSymbol>& functions() const { return functions_; }
    const std::vector<RelSymbol>& relations() const { return relations_; }
    const FunSymbol* find_function(const std::string& name) const;
    const RelSymbol* find_relation(const std::string& name) const;

    /// Checks the signature-level invariants (a ground constant exists in
    /// pure-logic mode, names are unique). Throws TypeError.
    void validate() const;

private:
    Mode mode_ = Mode::Logic;
    std::vector<FunSymbol> functions_;
    std::vector<RelSymbol> relations_;
};

/// A typed variable; identity is (name, type).
struct Var {
    std::string name;
    Type type;

    friend bool operator==(const Var& a, const Var& b) { return a.name == b.name && a.type == b.type; }
    friend bool operator!=(const Var& a, const Var& b) { return !(a == b); }
};

/// Binder-free combinatory terms. Every Term is well-typed: App checks the
/// argument type at construction and throws TypeError otherwise.
class Term {
public:
    enum class Kind { Const, Var, App };

    /// Built-in constant with its type indices (PI[s,t], SIG[r,s,t], SET[s],
    /// CUP[s], BIGCUP[s,t], REC[s]; ZERO and SUC take none).
    static Term constant(ConstKind kind, std::vector<Type> indices = {});
    /// First-order constant or function symbol of the given type.
    static Term user_constant(std::string name, Type type);
    static Term var(Var v);
    static Term var(std::string name, Type type) { return var(Var{std::move(name), std::move(type)}); }
    static Term app(Term fun, Term arg);
    static Term apps(Term fun, std::span<const Term> args);
    static Term apps(Term fun, std::initializer_list<Term> args) {
        return apps(std::move(fun), std::span<const Term>(args.begin(), args.size()));
    }

    Kind kind() const;
    bool is_const() const { return kind() == Kind::Const; }
    bool is_var() const { return kind() == Kind::Var; }
    bool is_app() const { return kind() == Kind::App; }

    const Type& type() const;

    ConstKind const_kind() const;
    const std::vector<Type>& indices() const;
    const std::string& name() const; // constant or variable name
    const Var& variable() const;
    const Term& fun() const;
    const Term& arg() const;

    /// Head of the application spine and number of arguments applied to it.
    const Term& head() const;
    std::size_t arg_count() const;
    /// Arguments of the spine, left to right.
    std::vector<Term> spine_args() const;

    /// True iff no subterm is a redex.
    bool is_normal() const;
    /// True iff this node (as a spine prefix) is a redex.
    bool is_redex() const;
    bool is_closed() const;
    /// Number of constant and variable occurrences (saturating).
    std::uint64_t size() const;
    std::size_t hash() const;

    bool same_node(const Term& other) const { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// The schema type of a constant, instantiated at its indices. Rejects
/// arithmetic constants in pure-logic mode and unknown user constants.
Type type_of_constant(ConstKind kind, const std::vector<Type>& indices, const Signature& sig);
Type type_of_user_constant(const std::string& name, const Signature& sig);

const char* const_keyword(ConstKind kind);
std::size_t index_count(ConstKind kind);

/// Ordered list of typed variables without duplicate names.
class Context {
public:
    Context() = default;
    explicit Context(std::vector<Var> vars);

    void add(Var v);
    const std::vector<Var>& vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }
    const Var* find(const std::string& name) const;
    bool contains(const Var& v) const;
    std::vector<Type> types() const;

private:
    std::vector<Var> vars_;
};

/// Returns the type of `t`, checking that every variable is declared in `ctx`
/// with the same type and every application is well formed.
Type typecheck(const Term& t, const Context& ctx);

/// t[s/x]; throws TypeError if s and x have different types.
Term subst_term(const Term& t, const Var& x, const Term& s);

bool occurs(const Var& x, const Term& t);
/// Free variables in order of first occurrence (left to right).
std::vector<Var> free_vars(const Term& t);

Term numeral(std::uint64_t n);
/// S...S0 decoded, if `t` has that shape.
std::optional<std::uint64_t> numeral_value(const Term& t);

/// Canonical closed inhabitant: the first ground constant (0 in arithmetic
/// mode), singletons at star types, constant functions at arrow types.
Term inhabitant(const Type& t, const Signature& sig);

std::string to_string(const Term& t);

} // namespace hmr
