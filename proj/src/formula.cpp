#include "hmr/formula.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "hmr/abstraction.hpp"
#include "hmr/error.hpp"

namespace hmr {

struct Formula::Node {
    Kind kind;
    std::optional<Type> rho;
    std::vector<Term> terms; // Eq/Mem: lhs, rhs; Rel: args; bounded: bound
    std::string name;
    std::optional<Var> var;
    std::vector<Formula> subs;
};

Formula Formula::bot() { return Formula(std::make_shared<const Node>(Node{Kind::Bot})); }

Formula Formula::eq(Type rho, Term lhs, Term rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::Eq, std::move(rho), {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::mem(Type rho, Term elem, Term set) {
    return Formula(std::make_shared<const Node>(Node{Kind::Mem, std::move(rho), {std::move(elem), std::move(set)}}));
}

Formula Formula::rel(std::string name, std::vector<Term> args) {
    return Formula(std::make_shared<const Node>(Node{Kind::Rel, std::nullopt, std::move(args), std::move(name)}));
}

Formula Formula::conj(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Kind::And, {}, {}, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disj(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, {}, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::imp(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Kind::Imp, {}, {}, {}, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::forall(Var x, Formula body) {
    return Formula(std::make_shared<const Node>(Node{Kind::Forall, {}, {}, {}, std::move(x), {std::move(body)}}));
}

Formula Formula::exists(Var x, Formula body) {
    return Formula(std::make_shared<const Node>(Node{Kind::Exists, {}, {}, {}, std::move(x), {std::move(body)}}));
}

Formula Formula::bforall(Var x, Term bound, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::BForall, {}, {std::move(bound)}, {}, std::move(x), {std::move(body)}}));
}

Formula Formula::bexists(Var x, Term bound, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::BExists, {}, {std::move(bound)}, {}, std::move(x), {std::move(body)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_atomic() const {
    auto k = kind();
    return k == Kind::Bot || k == Kind::Eq || k == Kind::Mem || k == Kind::Rel;
}

bool Formula::is_quantifier() const {
    auto k = kind();
    return k == Kind::Forall || k == Kind::Exists || k == Kind::BForall || k == Kind::BExists;
}

bool Formula::is_bounded() const { return kind() == Kind::BForall || kind() == Kind::BExists; }

bool Formula::is_binary() const {
    auto k = kind();
    return k == Kind::And || k == Kind::Or || k == Kind::Imp;
}

const Type& Formula::rho() const { return *node_->rho; }
const Term& Formula::lhs() const { return node_->terms.at(0); }
const Term& Formula::rhs() const { return node_->terms.at(1); }
const std::string& Formula::rel_name() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->terms; }
const Formula& Formula::left() const { return node_->subs.at(0); }
const Formula& Formula::right() const { return node_->subs.at(1); }
const Var& Formula::var() const { return *node_->var; }
const Term& Formula::bound() const { return node_->terms.at(0); }
const Formula& Formula::body() const { return node_->subs.at(0); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.rho == y.rho && x.terms == y.terms && x.name == y.name && x.var == y.var &&
           x.subs == y.subs;
}

// ---------------------------------------------------------------- alpha equality

namespace {

using Binders = std::vector<std::pair<Var, Var>>;

bool term_alpha(const Term& s, const Term& t, const Binders& env) {
    if (s.kind() != t.kind()) return false;
    switch (s.kind()) {
    case Term::Kind::Const:
        return s == t;
    case Term::Kind::Var: {
        for (auto it = env.rbegin(); it != env.rend(); ++it) {
            bool l = it->first == s.variable();
            bool r = it->second == t.variable();
            if (l || r) return l && r;
        }
        return s.variable() == t.variable();
    }
    case Term::Kind::App:
        return term_alpha(s.fun(), t.fun(), env) && term_alpha(s.arg(), t.arg(), env);
    }
    return false;
}

bool alpha(const Formula& a, const Formula& b, Binders& env) {
    using K = Formula::Kind;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case K::Bot:
        return true;
    case K::Eq:
    case K::Mem:
        return a.rho() == b.rho() && term_alpha(a.lhs(), b.lhs(), env) && term_alpha(a.rhs(), b.rhs(), env);
    case K::Rel: {
        if (a.rel_name() != b.rel_name() || a.args().size() != b.args().size()) return false;
        for (std::size_t i = 0; i < a.args().size(); ++i)
            if (!term_alpha(a.args()[i], b.args()[i], env)) return false;
        return true;
    }
    case K::And:
    case K::Or:
    case K::Imp:
        return alpha(a.left(), b.left(), env) && alpha(a.right(), b.right(), env);
    case K::Forall:
    case K::Exists:
    case K::BForall:
    case K::BExists: {
        if (a.var().type != b.var().type) return false;
        if (a.is_bounded() && !term_alpha(a.bound(), b.bound(), env)) return false;
        env.emplace_back(a.var(), b.var());
        bool ok = alpha(a.body(), b.body(), env);
        env.pop_back();
        return ok;
    }
    }
    return false;
}

} // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
    Binders env;
    return alpha(a, b, env);
}

// ---------------------------------------------------------------- well-formedness

namespace {

struct WellFormed {
    const Context& ctx;
    const Signature& sig;
    std::vector<std::string> diags;
    std::vector<Var> scope;

    void type_ok(const Type& t) {
        switch (t.kind()) {
        case Type::Kind::Ground:
            if (t != sig.ground())
                diags.push_back("ground type '" + t.ground_name() + "' does not belong to this signature");
            break;
        case Type::Kind::Arrow:
            type_ok(t.domain());
            type_ok(t.codomain());
            break;
        case Type::Kind::Star:
            type_ok(t.element());
            break;
        }
    }

    void term_ok(const Term& t) {
        for (auto& v : free_vars(t)) {
            const Var* found = nullptr;
            for (auto it = scope.rbegin(); it != scope.rend(); ++it)
                if (it->name == v.name) {
                    found = &*it;
                    break;
                }
            if (!found) found = ctx.find(v.name);
            if (!found)
                diags.push_back("unbound variable '" + v.name + "' in '" + to_string(t) + "'");
            else if (found->type != v.type)
                diags.push_back("variable '" + v.name + "' used at type " + to_string(v.type) + " but declared " +
                                to_string(found->type));
        }
        type_ok(t.type());
    }

    void run(const Formula& a) {
        using K = Formula::Kind;
        switch (a.kind()) {
        case K::Bot:
            return;
        case K::Eq:
            type_ok(a.rho());
            term_ok(a.lhs());
            term_ok(a.rhs());
            if (a.lhs().type() != a.rho() || a.rhs().type() != a.rho())
                diags.push_back("equation sides must have type " + to_string(a.rho()) + " (got " +
                                to_string(a.lhs().type()) + " and " + to_string(a.rhs().type()) + ")");
            return;
        case K::Mem:
            type_ok(a.rho());
            term_ok(a.lhs());
            term_ok(a.rhs());
            if (a.lhs().type() != a.rho())
                diags.push_back("element side must have type " + to_string(a.rho()) + ", got " +
                                to_string(a.lhs().type()));
            if (a.rhs().type() != Type::star(a.rho()))
                diags.push_back("set side must have type " + to_string(Type::star(a.rho())) + ", got " +
                                to_string(a.rhs().type()));
            return;
        case K::Rel: {
            const RelSymbol* r = sig.find_relation(a.rel_name());
            if (!r) {
                diags.push_back("unknown relation symbol '" + a.rel_name() + "'");
                return;
            }
            if (static_cast<std::size_t>(r->arity) != a.args().size())
                diags.push_back("relation '" + r->name + "' expects " + std::to_string(r->arity) + " arguments, got " +
                                std::to_string(a.args().size()));
            for (auto& t : a.args()) {
                term_ok(t);
                if (t.type() != sig.ground())
                    diags.push_back("relation argument '" + to_string(t) + "' must have ground type");
            }
            return;
        }
        case K::And:
        case K::Or:
        case K::Imp:
            run(a.left());
            run(a.right());
            return;
        case K::Forall:
        case K::Exists:
        case K::BForall:
        case K::BExists:
            type_ok(a.var().type);
            if (a.is_bounded()) {
                term_ok(a.bound());
                if (a.bound().type() != Type::star(a.var().type))
                    diags.push_back("bound of '" + a.var().name + "' must have type " +
                                    to_string(Type::star(a.var().type)) + ", got " + to_string(a.bound().type()));
                if (occurs(a.var(), a.bound()))
                    diags.push_back("bound mentions bound variable '" + a.var().name + "'");
            }
            scope.push_back(a.var());
            run(a.body());
            scope.pop_back();
            return;
        }
    }
};

} // namespace

std::vector<std::string> well_formed(const Formula& a, const Context& ctx, const Signature& sig) {
    WellFormed wf{ctx, sig, {}, {}};
    wf.run(a);
    return wf.diags;
}

bool is_exists_free(const Formula& a) {
    using K = Formula::Kind;
    switch (a.kind()) {
    case K::Exists:
        return false;
    case K::And:
    case K::Or:
    case K::Imp:
        return is_exists_free(a.left()) && is_exists_free(a.right());
    case K::Forall:
    case K::BForall:
    case K::BExists:
        return is_exists_free(a.body());
    default:
        return true;
    }
}

// ---------------------------------------------------------------- variables

namespace {

void add_unique(std::vector<Var>& out, const Var& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

void collect_free(const Formula& a, std::vector<Var>& bound, std::vector<Var>& out) {
    using K = Formula::Kind;
    auto terms = [&](const Term& t) {
        for (auto& v : free_vars(t))
            if (std::find(bound.begin(), bound.end(), v) == bound.end()) add_unique(out, v);
    };
    switch (a.kind()) {
    case K::Bot:
        return;
    case K::Eq:
    case K::Mem:
        terms(a.lhs());
        terms(a.rhs());
        return;
    case K::Rel:
        for (auto& t : a.args()) terms(t);
        return;
    case K::And:
    case K::Or:
    case K::Imp:
        collect_free(a.left(), bound, out);
        collect_free(a.right(), bound, out);
        return;
    case K::Forall:
    case K::Exists:
    case K::BForall:
    case K::BExists:
        if (a.is_bounded()) terms(a.bound());
        bound.push_back(a.var());
        collect_free(a.body(), bound, out);
        bound.pop_back();
        return;
    }
}

void collect_names(const Formula& a, std::set<std::string>& out) {
    using K = Formula::Kind;
    auto terms = [&](const Term& t) {
        for (auto& v : free_vars(t)) out.insert(v.name);
    };
    switch (a.kind()) {
    case K::Bot:
        return;
    case K::Eq:
    case K::Mem:
        terms(a.lhs());
        terms(a.rhs());
        return;
    case K::Rel:
        for (auto& t : a.args()) terms(t);
        return;
    case K::And:
    case K::Or:
    case K::Imp:
        collect_names(a.left(), out);
        collect_names(a.right(), out);
        return;
    default:
        if (a.is_bounded()) terms(a.bound());
        out.insert(a.var().name);
        collect_names(a.body(), out);
        return;
    }
}

} // namespace

std::vector<Var> free_vars(const Formula& a) {
    std::vector<Var> bound, out;
    collect_free(a, bound, out);
    return out;
}

bool occurs_free(const Var& x, const Formula& a) {
    auto fv = free_vars(a);
    return std::find(fv.begin(), fv.end(), x) != fv.end();
}

std::set<std::string> all_names(const Formula& a) {
    std::set<std::string> out;
    collect_names(a, out);
    return out;
}

// ---------------------------------------------------------------- substitution

Formula subst_formula(const Formula& a, const Var& x, const Term& t) {
    using K = Formula::Kind;
    if (x.type != t.type())
        throw TypeError("substituting " + to_string(t.type()) + " term for '" + x.name + "' of type " +
                        to_string(x.type));
    switch (a.kind()) {
    case K::Bot:
        return a;
    case K::Eq:
        return Formula::eq(a.rho(), subst_term(a.lhs(), x, t), subst_term(a.rhs(), x, t));
    case K::Mem:
        return Formula::mem(a.rho(), subst_term(a.lhs(), x, t), subst_term(a.rhs(), x, t));
    case K::Rel: {
        std::vector<Term> args;
        for (auto& s : a.args()) args.push_back(subst_term(s, x, t));
        return Formula::rel(a.rel_name(), std::move(args));
    }
    case K::And:
        return Formula::conj(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
    case K::Or:
        return Formula::disj(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
    case K::Imp:
        return Formula::imp(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
    case K::Forall:
    case K::Exists:
    case K::BForall:
    case K::BExists: {
        std::optional<Term> bound;
        if (a.is_bounded()) bound = subst_term(a.bound(), x, t);
        Var y = a.var();
        Formula body = a.body();
        if (y != x && occurs_free(x, body)) {
            auto tfv = free_vars(t);
            bool clash = std::any_of(tfv.begin(), tfv.end(), [&](const Var& v) { return v.name == y.name; });
            if (clash) {
                std::vector<std::string> taken;
                for (auto& n : all_names(body)) taken.push_back(n);
                for (auto& v : tfv) taken.push_back(v.name);
                taken.push_back(x.name);
                if (bound)
                    for (auto& v : free_vars(*bound)) taken.push_back(v.name);
                Var renamed{fresh_name(y.name, taken), y.type};
                body = subst_formula(body, y, Term::var(renamed));
                y = renamed;
            }
            body = subst_formula(body, x, t);
        }
        switch (a.kind()) {
        case K::Forall: return Formula::forall(y, body);
        case K::Exists: return Formula::exists(y, body);
        case K::BForall: return Formula::bforall(y, *bound, body);
        default: return Formula::bexists(y, *bound, body);
        }
    }
    }
    throw InternalError("unreachable");
}

// ---------------------------------------------------------------- printing

namespace {

int level(const Formula& a) {
    using K = Formula::Kind;
    switch (a.kind()) {
    case K::Imp: return 1;
    case K::Or: return 2;
    case K::And: return 3;
    case K::Forall:
    case K::Exists:
    case K::BForall:
    case K::BExists: return 0;
    default: return 4;
    }
}

// arrow types are parenthesized so that a following `->` reads as implication
std::string annotation(const Type& t) {
    return t.is_arrow() ? "(" + to_string(t) + ")" : to_string(t);
}

void print(std::string& out, const Formula& a, int need) {
    using K = Formula::Kind;
    bool wrap = level(a) < need;
    if (wrap) out += '(';
    switch (a.kind()) {
    case K::Bot:
        out += "bot";
        break;
    case K::Eq:
        out += to_string(a.lhs()) + " = " + to_string(a.rhs()) + " : " + annotation(a.rho());
        break;
    case K::Mem:
        out += to_string(a.lhs()) + " in " + to_string(a.rhs()) + " : " + annotation(a.rho());
        break;
    case K::Rel:
        out += a.rel_name() + "(";
        for (std::size_t i = 0; i < a.args().size(); ++i) {
            if (i) out += ", ";
            out += to_string(a.args()[i]);
        }
        out += ")";
        break;
    case K::Imp:
        print(out, a.left(), 2);
        out += " -> ";
        print(out, a.right(), 1);
        break;
    case K::Or:
        print(out, a.left(), 2);
        out += " | ";
        print(out, a.right(), 3);
        break;
    case K::And:
        print(out, a.left(), 3);
        out += " & ";
        print(out, a.right(), 4);
        break;
    case K::Forall:
    case K::Exists:
    case K::BForall:
    case K::BExists:
        out += (a.kind() == K::Forall || a.kind() == K::BForall) ? "all " : "ex ";
        out += a.var().name;
        if (a.is_bounded())
            out += " in " + to_string(a.bound());
        else
            out += ":" + to_string(a.var().type);
        out += " . ";
        print(out, a.body(), 0);
        break;
    }
    if (wrap) out += ')';
}

} // namespace

std::string to_string(const Formula& a) {
    std::string out;
    print(out, a, 0);
    return out;
}

} // namespace hmr
