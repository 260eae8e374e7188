#include "hmr/gen.hpp"

#include <algorithm>

#include "hmr/abstraction.hpp"

namespace hmr::gen {

namespace {

Type nat() { return Type::ground("N"); }
Term c(ConstKind k, std::vector<Type> ix = {}) { return Term::constant(k, std::move(ix)); }

} // namespace

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

int Generator::below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

Type Generator::type(int depth) {
    if (depth <= 0 || coin(0.35)) return nat();
    switch (below(3)) {
    case 0: return Type::star(type(depth - 1));
    case 1: return Type::arrow(type(depth - 1), type(depth - 1));
    default: return Type::arrow(nat(), type(depth - 1));
    }
}

Var Generator::fresh(const Type& t) { return Var{"v" + std::to_string(++names_), t}; }

Term Generator::leaf(const Type& t, const std::vector<Var>& vars) {
    std::vector<const Var*> matching;
    for (auto& v : vars)
        if (v.type == t) matching.push_back(&v);
    if (!matching.empty() && coin(0.6)) return Term::var(*matching[static_cast<std::size_t>(below(static_cast<int>(matching.size())))]);
    switch (t.kind()) {
    case Type::Kind::Ground:
        return numeral(static_cast<std::uint64_t>(below(3)));
    case Type::Kind::Star:
        return Term::app(c(ConstKind::Sing, {t.element()}), leaf(t.element(), vars));
    case Type::Kind::Arrow:
        if (t == Type::arrow(nat(), nat()) && coin(0.5)) return c(ConstKind::Suc);
        if (t.codomain().is_star() && t.domain() == t.codomain().element() && coin(0.5))
            return c(ConstKind::Sing, {t.domain()});
        return Term::app(c(ConstKind::Pi, {t.codomain(), t.domain()}), leaf(t.codomain(), vars));
    }
    return numeral(0);
}

Term Generator::build(const Type& t, int size, const std::vector<Var>& vars) {
    if (size <= 1) return leaf(t, vars);
    auto split = [&](int parts) {
        std::vector<int> out(static_cast<std::size_t>(parts), 1);
        for (int k = parts; k < size; ++k) out[static_cast<std::size_t>(below(parts))]++;
        return out;
    };
    // pick a construction; retry until one applies to t
    for (;;) {
        switch (below(9)) {
        case 0: { // extra argument: (f a) with f : U -> t
            Type u = type(1);
            auto s = split(2);
            return Term::app(build(Type::arrow(u, t), s[0], vars), build(u, s[1], vars));
        }
        case 1: { // PI redex
            Type u = type(1);
            auto s = split(2);
            return Term::apps(c(ConstKind::Pi, {t, u}), {build(t, s[0], vars), build(u, s[1], vars)});
        }
        case 2: { // SIG redex
            Type r = type(1), m = type(1);
            auto s = split(3);
            return Term::apps(c(ConstKind::Sigma, {r, m, t}),
                              {build(Type::arrow(r, Type::arrow(m, t)), s[0], vars),
                               build(Type::arrow(r, m), s[1], vars), build(r, s[2], vars)});
        }
        case 3:
            if (t.is_star()) {
                auto s = split(2);
                if (coin(0.5)) return Term::app(c(ConstKind::Sing, {t.element()}), build(t.element(), size - 1, vars));
                return Term::apps(c(ConstKind::Cup, {t.element()}), {build(t, s[0], vars), build(t, s[1], vars)});
            }
            break;
        case 4:
            if (t.is_star()) { // BIGCUP over a small family
                Type e = coin(0.7) ? nat() : type(1);
                auto s = split(2);
                return Term::apps(c(ConstKind::BigCup, {e, t.element()}),
                                  {build(Type::star(e), s[0], vars), build(Type::arrow(e, t), s[1], vars)});
            }
            break;
        case 5:
            if (t == nat()) {
                if (coin(0.3)) return numeral(static_cast<std::uint64_t>(below(4)));
                return Term::app(c(ConstKind::Suc), build(t, size - 1, vars));
            }
            break;
        case 6: { // recursor on a small numeral or a small N-term
            auto s = split(3);
            Term n = coin(0.7) ? numeral(static_cast<std::uint64_t>(below(4))) : build(nat(), std::min(s[0], 4), vars);
            Type step = Type::arrow(t, Type::arrow(nat(), t));
            return Term::apps(c(ConstKind::Rec, {t}), {n, build(t, s[1], vars), build(step, s[2], vars)});
        }
        case 7:
            if (t.is_arrow()) { // abstraction
                Var x = fresh(t.domain());
                std::vector<Var> inner = vars;
                inner.push_back(x);
                return bracket(x, build(t.codomain(), size - 1, inner));
            }
            break;
        case 8: { // a variable applied to arguments
            std::vector<const Var*> heads;
            for (auto& v : vars) {
                TypeShape sh = decompose(v.type);
                Type rest = v.type;
                for (std::size_t k = 0; k <= sh.args.size(); ++k) {
                    if (rest == t && k > 0) {
                        heads.push_back(&v);
                        break;
                    }
                    if (!rest.is_arrow()) break;
                    rest = rest.codomain();
                }
            }
            if (heads.empty()) break;
            const Var& h = *heads[static_cast<std::size_t>(below(static_cast<int>(heads.size())))];
            Term out = Term::var(h);
            int budget = size - 1;
            while (out.type() != t) {
                int s = std::max(1, budget / 2);
                budget -= s;
                out = Term::app(out, build(out.type().domain(), s, vars));
            }
            return out;
        }
        }
    }
}

Term Generator::closed(const Type& t, int size) { return build(t, size, {}); }

Term Generator::open(const Type& t, int size, const std::vector<Var>& vars) { return build(t, size, vars); }

Term Generator::closed_term(int max_size, int max_depth) {
    for (;;) {
        Type t = type(below(max_depth + 1));
        Term out = closed(t, 2 + below(std::max(1, max_size / 3)));
        if (out.size() <= static_cast<std::uint64_t>(max_size)) return out;
    }
}

Term Generator::numeral_set(int max_elems, int max_value) {
    int n = 1 + below(max_elems);
    Term sing = c(ConstKind::Sing, {nat()});
    Term out = Term::app(sing, numeral(static_cast<std::uint64_t>(below(max_value + 1))));
    for (int i = 1; i < n; ++i)
        out = Term::apps(c(ConstKind::Cup, {nat()}),
                         {out, Term::app(sing, numeral(static_cast<std::uint64_t>(below(max_value + 1))))});
    return out;
}

// ---------------------------------------------------------------- formulas

Term Generator::ground_term(const std::vector<Var>& scope) {
    std::vector<const Var*> ns;
    for (auto& v : scope)
        if (v.type == nat()) ns.push_back(&v);
    Term t = !ns.empty() && coin(0.6) ? Term::var(*ns[static_cast<std::size_t>(below(static_cast<int>(ns.size())))])
                                      : numeral(static_cast<std::uint64_t>(below(4)));
    if (coin(0.25)) t = Term::app(c(ConstKind::Suc), t);
    return t;
}

Formula Generator::atom(const std::vector<Var>& scope) {
    switch (below(4)) {
    case 0:
        return Formula::eq(nat(), ground_term(scope), ground_term(scope));
    case 1: {
        Term set = Term::apps(c(ConstKind::Cup, {nat()}),
                              {Term::app(c(ConstKind::Sing, {nat()}), ground_term(scope)),
                               Term::app(c(ConstKind::Sing, {nat()}), ground_term(scope))});
        return Formula::mem(nat(), ground_term(scope), set);
    }
    case 2:
        return Formula::eq(Type::star(nat()), Term::app(c(ConstKind::Sing, {nat()}), ground_term(scope)),
                           numeral_set(2, 3));
    default:
        if (coin(0.2)) return Formula::bot();
        return Formula::eq(nat(), ground_term(scope), numeral(static_cast<std::uint64_t>(below(3))));
    }
}

Formula Generator::formula_in(int depth, std::vector<Var>& scope, bool allow_exists) {
    if (depth <= 0 || coin(0.2)) return atom(scope);
    auto quantified = [&](int kind) {
        Type t = kind < 2 ? (coin(0.7) ? nat() : type(2)) : nat();
        Var x = fresh(t);
        std::optional<Term> bound;
        if (kind >= 2) bound = coin(0.5) ? numeral_set(3, 4) : open(Type::star(nat()), 3, scope);
        scope.push_back(x);
        Formula body = formula_in(depth - 1, scope, allow_exists);
        scope.pop_back();
        switch (kind) {
        case 0: return Formula::forall(x, body);
        case 1: return Formula::exists(x, body);
        case 2: return Formula::bforall(x, *bound, body);
        default: return Formula::bexists(x, *bound, body);
        }
    };
    switch (below(7)) {
    case 0: return Formula::conj(formula_in(depth - 1, scope, allow_exists), formula_in(depth - 1, scope, allow_exists));
    case 1: return Formula::disj(formula_in(depth - 1, scope, allow_exists), formula_in(depth - 1, scope, allow_exists));
    case 2: return Formula::imp(formula_in(depth - 1, scope, allow_exists), formula_in(depth - 1, scope, allow_exists));
    case 3: return quantified(0);
    case 4: return allow_exists ? quantified(1) : quantified(3);
    case 5: return quantified(2);
    default: return quantified(3);
    }
}

Formula Generator::formula(int depth) {
    std::vector<Var> scope;
    return formula_in(depth, scope, true);
}

namespace {

struct Monotone {
    Generator& g;

    // ex-free and free of unbounded quantifiers
    Formula decidable(int depth, std::vector<Var>& scope) {
        if (depth <= 0 || g.coin(0.3)) return atom(scope);
        switch (g.below(5)) {
        case 0: return Formula::conj(decidable(depth - 1, scope), decidable(depth - 1, scope));
        case 1: return Formula::disj(decidable(depth - 1, scope), decidable(depth - 1, scope));
        case 2: return Formula::imp(decidable(depth - 1, scope), decidable(depth - 1, scope));
        default: return bounded(depth, scope, [&](std::vector<Var>& s) { return decidable(depth - 1, s); });
        }
    }

    template <class F>
    Formula bounded(int, std::vector<Var>& scope, F body) {
        Var x = g.fresh(nat());
        Term bound = g.numeral_set(3, 4);
        scope.push_back(x);
        Formula b = body(scope);
        scope.pop_back();
        return g.coin(0.5) ? Formula::bforall(x, bound, b) : Formula::bexists(x, bound, b);
    }

    Formula atom(std::vector<Var>& scope) { return g.atom(scope); }

    Formula any(int depth, std::vector<Var>& scope) {
        if (depth <= 0 || g.coin(0.15)) return atom(scope);
        switch (g.below(6)) {
        case 0: return Formula::conj(any(depth - 1, scope), any(depth - 1, scope));
        case 1: return Formula::disj(any(depth - 1, scope), any(depth - 1, scope));
        case 2: return Formula::imp(decidable(depth - 1, scope), any(depth - 1, scope));
        case 3:
        case 4: {
            Var z = g.fresh(nat());
            scope.push_back(z);
            Formula b = any(depth - 1, scope);
            scope.pop_back();
            return Formula::exists(z, b);
        }
        default:
            return bounded(depth, scope, [&](std::vector<Var>& s) { return any(depth - 1, s); });
        }
    }
};

} // namespace

Formula Generator::monotone_formula(int depth) {
    std::vector<Var> scope;
    Monotone m{*this};
    return m.any(depth, scope);
}

} // namespace hmr::gen
