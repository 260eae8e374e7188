#include "hmr/abstraction.hpp"

#include <algorithm>

#include "hmr/error.hpp"

namespace hmr {

Term identity_combinator(const Type& t) {
    Type tt = Type::arrow(t, t);
    return Term::apps(Term::constant(ConstKind::Sigma, {t, tt, t}),
                      {Term::constant(ConstKind::Pi, {t, tt}), Term::constant(ConstKind::Pi, {t, t})});
}

Term bracket(const Var& x, const Term& t) {
    if (t.is_var() && t.variable() == x) return identity_combinator(x.type);
    if (!occurs(x, t)) return Term::app(Term::constant(ConstKind::Pi, {t.type(), x.type}), t);
    // t = f a with x free somewhere inside
    const Term& f = t.fun();
    const Term& a = t.arg();
    Term bf = bracket(x, f);
    Term ba = bracket(x, a);
    Type alpha = a.type();
    Type beta = t.type();
    return Term::apps(Term::constant(ConstKind::Sigma, {x.type, alpha, beta}), {bf, ba});
}

Term bracket_all(std::span<const Var> xs, const Term& t) {
    Term out = t;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = bracket(*it, out);
    return out;
}

std::vector<Term> bracket_tuple(std::span<const Var> xs, std::span<const Term> ts) {
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) out.push_back(bracket_all(xs, t));
    return out;
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
    std::string name = base;
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += '\'';
    return name;
}

namespace {

std::vector<std::string> names_of(std::initializer_list<const Term*> terms) {
    std::vector<std::string> out;
    for (auto* t : terms)
        for (auto& v : free_vars(*t)) out.push_back(v.name);
    return out;
}

std::vector<Var> argument_vars(const TypeShape& shape, std::vector<std::string> taken) {
    std::vector<Var> xs;
    for (std::size_t i = 0; i < shape.args.size(); ++i) {
        std::string n = fresh_name("x" + std::to_string(i + 1), taken);
        taken.push_back(n);
        xs.push_back(Var{n, shape.args[i]});
    }
    return xs;
}

std::vector<Term> as_terms(const std::vector<Var>& xs) {
    std::vector<Term> out;
    for (auto& x : xs) out.push_back(Term::var(x));
    return out;
}

void require_end_star(const Type& sigma, const char* op) {
    if (!is_end_star(sigma)) throw TypeError(std::string(op) + " needs an end-star type, got " + to_string(sigma));
}

} // namespace

Term sqcup(const Term& a, const Term& b, const Type& sigma) {
    require_end_star(sigma, "sqcup");
    if (a.type() != sigma || b.type() != sigma)
        throw TypeError("sqcup operands must have type " + to_string(sigma));
    TypeShape shape = decompose(sigma);
    std::vector<Var> xs = argument_vars(shape, names_of({&a, &b}));
    std::vector<Term> args = as_terms(xs);
    Term cup = Term::constant(ConstKind::Cup, {shape.result.element()});
    Term body = Term::apps(cup, {Term::apps(a, args), Term::apps(b, args)});
    return bracket_all(xs, body);
}

Term big_sqcup(const Term& family, const Term& f, const Type& sigma) {
    require_end_star(sigma, "big_sqcup");
    if (!family.type().is_star()) throw TypeError("big_sqcup family must have star type");
    const Type& rho = family.type().element();
    if (f.type() != Type::arrow(rho, sigma))
        throw TypeError("big_sqcup function must have type " + to_string(Type::arrow(rho, sigma)) + ", got " +
                        to_string(f.type()));
    TypeShape shape = decompose(sigma);
    Term bigcup = Term::constant(ConstKind::BigCup, {rho, shape.result.element()});
    if (shape.args.empty()) return Term::apps(bigcup, {family, f});
    std::vector<std::string> taken = names_of({&family, &f});
    std::vector<Var> xs = argument_vars(shape, taken);
    for (auto& x : xs) taken.push_back(x.name);
    Var w{fresh_name("w", taken), rho};
    std::vector<Term> args = as_terms(xs);
    Term inner = bracket(w, Term::apps(Term::app(f, Term::var(w)), args));
    return bracket_all(xs, Term::apps(bigcup, {family, inner}));
}

SubsetVerdict subseteq_check(const Term& a, const Term& b, const Type& sigma,
                             std::span<const std::vector<Term>> probe, std::size_t budget) {
    require_end_star(sigma, "subseteq_check");
    if (a.type() != sigma || b.type() != sigma)
        throw TypeError("subseteq_check operands must have type " + to_string(sigma));
    auto included = [&](const Term& x, const Term& y) {
        WitnessSet ys = enumerate_set(y, budget);
        for (auto& e : enumerate_set(x, budget))
            if (!ys.contains(e)) return false;
        return true;
    };
    TypeShape shape = decompose(sigma);
    if (shape.args.empty()) return {included(a, b), false};
    SubsetVerdict v{true, true};
    for (auto& args : probe) {
        if (args.size() != shape.args.size()) throw TypeError("probe tuple has the wrong arity");
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i].type() != shape.args[i]) throw TypeError("probe argument has the wrong type");
            if (!args[i].is_closed()) throw TypeError("probe arguments must be closed");
        }
        if (!included(Term::apps(a, args), Term::apps(b, args))) {
            v.holds = false;
            break;
        }
    }
    return v;
}

} // namespace hmr
