#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hmr/term.hpp"

namespace hmr {

/// Formulas of the star language. Construction does not check typing;
/// `well_formed` reports violations as diagnostics.
class Formula {
public:
    enum class Kind { Bot, Eq, Mem, Rel, And, Or, Imp, Forall, Exists, BForall, BExists };

    static Formula bot();
    /// lhs =_rho rhs
    static Formula eq(Type rho, Term lhs, Term rhs);
    /// elem in_rho set
    static Formula mem(Type rho, Term elem, Term set);
    static Formula rel(std::string name, std::vector<Term> args);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula imp(Formula a, Formula b);
    static Formula forall(Var x, Formula body);
    static Formula exists(Var x, Formula body);
    static Formula bforall(Var x, Term bound, Formula body);
    static Formula bexists(Var x, Term bound, Formula body);
    static Formula neg(Formula a) { return imp(std::move(a), bot()); }
    static Formula iff(const Formula& a, const Formula& b) { return conj(imp(a, b), imp(b, a)); }

    Kind kind() const;
    bool is_atomic() const;
    bool is_quantifier() const;
    bool is_bounded() const;
    bool is_binary() const;

    const Type& rho() const;       // Eq, Mem
    const Term& lhs() const;       // Eq; element for Mem
    const Term& rhs() const;       // Eq; set for Mem
    const std::string& rel_name() const;
    const std::vector<Term>& args() const;
    const Formula& left() const;   // And, Or, Imp
    const Formula& right() const;
    const Var& var() const;        // quantifiers
    const Term& bound() const;     // bounded quantifiers
    const Formula& body() const;   // quantifiers

    /// Strict syntactic equality (bound names included).
    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Equality up to renaming of bound variables.
bool alpha_equal(const Formula& a, const Formula& b);

/// Empty iff every typing and bounded-quantifier side condition holds and all
/// free variables are declared in `ctx`.
std::vector<std::string> well_formed(const Formula& a, const Context& ctx, const Signature& sig);

/// No unbounded existential quantifier (bounded ones are allowed).
bool is_exists_free(const Formula& a);

/// Capture-avoiding A[t/x]; bound variables that would capture a free
/// variable of t are renamed to name', name'', ...
Formula subst_formula(const Formula& a, const Var& x, const Term& t);

/// Free variables in order of first occurrence. Variables of the bound term
/// of a bounded quantifier count as free occurrences.
std::vector<Var> free_vars(const Formula& a);

bool occurs_free(const Var& x, const Formula& a);

/// Every variable name appearing in `a`, bound or free.
std::set<std::string> all_names(const Formula& a);

std::string to_string(const Formula& a);

} // namespace hmr
