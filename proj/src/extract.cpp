#include "hmr/extract.hpp"

#include "hmr/abstraction.hpp"
#include "hmr/error.hpp"

namespace hmr {

const LineRealizers* RealizerBundle::line(int number) const {
    for (auto& l : lines)
        if (l.number == number) return &l;
    return nullptr;
}

Type realizer_type(const Context& ctx, const Type& t) { return arrows(ctx.types(), t); }

namespace {

std::vector<Term> terms_of(const std::vector<Var>& xs) {
    std::vector<Term> out;
    for (auto& x : xs) out.push_back(Term::var(x));
    return out;
}

/// Builds closed realizers lambda a, extra . body over the context tuple a.
class Builder {
public:
    Builder(const Context& ctx, const Signature& sig) : ctx_(ctx), sig_(sig) {}

    Var fresh(const Type& t) { return Var{"%" + std::to_string(++counter_), t}; }

    std::vector<Var> fresh(const std::vector<Type>& ts) {
        std::vector<Var> out;
        for (auto& t : ts) out.push_back(fresh(t));
        return out;
    }

    Term close(const std::vector<Var>& extra, const Term& body) const {
        std::vector<Var> all = ctx_.vars();
        all.insert(all.end(), extra.begin(), extra.end());
        return normalize(bracket_all(all, body), default_budget());
    }

    std::vector<Term> close_all(const std::vector<Var>& extra, const std::vector<Term>& bodies) const {
        std::vector<Term> out;
        for (auto& b : bodies) out.push_back(close(extra, b));
        return out;
    }

    /// T a for a closed realizer T.
    Term at_ctx(const Term& t) const { return Term::apps(t, terms_of(ctx_.vars())); }

    /// T a[z := s]; when z is not a context variable, plain T a.
    Term at_ctx_with(const Term& t, const Var& z, const Term& s) const {
        std::vector<Term> args = terms_of(ctx_.vars());
        for (std::size_t i = 0; i < args.size(); ++i)
            if (ctx_.vars()[i] == z) args[i] = s;
        return Term::apps(t, args);
    }

    Term inhabit(const Type& t) const { return inhabitant(t, sig_); }

private:
    const Context& ctx_;
    const Signature& sig_;
    int counter_ = 0;
};

std::vector<Term> concat(std::vector<Term> a, const std::vector<Term>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Term sing(const Term& t) { return Term::app(Term::constant(ConstKind::Sing, {t.type()}), t); }

} // namespace

std::vector<Term> extract_axiom(const std::string& name, const Params& p, const Formula& instance,
                                const Context& ctx, const Signature& sig) {
    if (hr_types(instance).empty()) return {};
    Builder b(ctx, sig);

    if (name == "DUP") {
        auto xs = b.fresh(hr_types(p.formula("A")));
        auto x = terms_of(xs);
        return b.close_all(xs, concat(x, x));
    }
    if (name == "CONTR") {
        auto sigma = hr_types(p.formula("A"));
        auto xs = b.fresh(sigma);
        auto ys = b.fresh(sigma);
        std::vector<Term> bodies;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            bodies.push_back(sqcup(Term::var(xs[i]), Term::var(ys[i]), sigma[i]));
        auto all = xs;
        all.insert(all.end(), ys.begin(), ys.end());
        return b.close_all(all, bodies);
    }
    if (name == "INL") {
        auto xs = b.fresh(hr_types(p.formula("A")));
        std::vector<Term> bodies = terms_of(xs);
        for (auto& t : hr_types(p.formula("B"))) bodies.push_back(b.inhabit(t));
        return b.close_all(xs, bodies);
    }
    if (name == "PROJ" || name == "AND_COMM" || name == "OR_COMM") {
        auto xs = b.fresh(hr_types(p.formula("A")));
        auto us = b.fresh(hr_types(p.formula("B")));
        auto all = xs;
        all.insert(all.end(), us.begin(), us.end());
        if (name == "PROJ") return b.close_all(all, terms_of(xs));
        return b.close_all(all, concat(terms_of(us), terms_of(xs)));
    }
    if (name == "EFQ") {
        std::vector<Term> bodies;
        for (auto& t : hr_types(p.formula("A"))) bodies.push_back(b.inhabit(t));
        return b.close_all({}, bodies);
    }
    if (name == "ALL_ELIM") {
        const Var& z = p.var("z");
        auto xs = b.fresh(hr_types(Formula::forall(z, p.formula("A"))));
        std::vector<Term> bodies;
        for (auto& x : xs) bodies.push_back(Term::app(Term::var(x), p.term("t")));
        return b.close_all(xs, bodies);
    }
    if (name == "EX_INTRO") {
        const Term& t = p.term("t");
        auto xs = b.fresh(hr_types(subst_formula(p.formula("A"), p.var("z"), t)));
        return b.close_all(xs, concat({sing(t)}, terms_of(xs)));
    }
    if (name == "BALL_UNFOLD") {
        auto xs = b.fresh(hr_types(p.formula("A")));
        Var z = b.fresh(p.var("z").type);
        auto all = xs;
        all.push_back(z);
        return b.close_all(all, terms_of(xs));
    }
    if (name == "BALL_FOLD") {
        const Var& z = p.var("z");
        const Term& t = p.term("t");
        auto sigma = hr_types(p.formula("A"));
        std::vector<Var> xs;
        std::vector<Term> bodies;
        for (auto& s : sigma) {
            xs.push_back(b.fresh(Type::arrow(z.type, s)));
            bodies.push_back(big_sqcup(t, Term::var(xs.back()), s));
        }
        return b.close_all(xs, bodies);
    }
    if (name == "BEX_UNFOLD") {
        auto xs = b.fresh(hr_types(p.formula("A")));
        return b.close_all(xs, concat({p.term("t")}, terms_of(xs)));
    }
    if (name == "BEX_FOLD") {
        Var zs = b.fresh(Type::star(p.var("z").type));
        auto xs = b.fresh(hr_types(p.formula("A")));
        std::vector<Var> all{zs};
        all.insert(all.end(), xs.begin(), xs.end());
        return b.close_all(all, terms_of(xs));
    }
    if (name == "AC") {
        const Var &z = p.var("z"), &w = p.var("w");
        auto left = b.fresh(hr_types(Formula::forall(z, Formula::exists(w, p.formula("A")))));
        // left = (W', X'...) with W' : z -> w*
        std::vector<Term> bodies{sing(Term::var(left[0]))};
        for (std::size_t i = 1; i < left.size(); ++i) bodies.push_back(Term::var(left[i]));
        return b.close_all(left, bodies);
    }
    if (name == "IP") {
        auto left = b.fresh(hr_types(Formula::exists(p.var("w"), p.formula("B"))));
        std::vector<Term> bodies{sing(Term::var(left[0]))};
        for (std::size_t i = 1; i < left.size(); ++i) bodies.push_back(Term::var(left[i]));
        return b.close_all(left, bodies);
    }
    if (name == "IND") {
        auto sigma = hr_types(p.formula("A"));
        const std::size_t k = sigma.size();
        const Type nat = Type::ground("N");
        auto xs = b.fresh(sigma);
        std::vector<Var> steps; // X_i : N -> sigma -> sigma_i
        for (auto& s : sigma) steps.push_back(b.fresh(arrows(std::vector<Type>{nat}, arrows(sigma, s))));
        Var n = b.fresh(nat);
        std::vector<Var> all = xs;
        all.insert(all.end(), steps.begin(), steps.end());
        all.push_back(n);
        Term suc = Term::constant(ConstKind::Suc);
        std::vector<Term> bodies;
        if (k == 1) {
            // R n x (lambda y, m . X m y)
            Var y = b.fresh(sigma[0]);
            Var m = b.fresh(nat);
            Term step = bracket_all(std::vector<Var>{y, m},
                                    Term::apps(Term::var(steps[0]), {Term::var(m), Term::var(y)}));
            bodies.push_back(Term::apps(Term::constant(ConstKind::Rec, {sigma[0]}),
                                        {Term::var(n), Term::var(xs[0]), step}));
        } else {
            // simultaneous recursion: component i of the state reached after n steps from (0, x)
            for (std::size_t i = 0; i < k; ++i) {
                Type rho = arrows(std::vector<Type>{nat}, arrows(sigma, sigma[i]));
                Var m = b.fresh(nat);
                auto vs = b.fresh(sigma);
                std::vector<Var> mv{m};
                mv.insert(mv.end(), vs.begin(), vs.end());
                Term base = bracket_all(mv, Term::var(vs[i]));
                Var kf = b.fresh(rho);
                Var n2 = b.fresh(nat);
                std::vector<Term> next{Term::app(suc, Term::var(m))};
                for (auto& x : steps) {
                    std::vector<Term> args{Term::var(m)};
                    for (auto& v : vs) args.push_back(Term::var(v));
                    next.push_back(Term::apps(Term::var(x), args));
                }
                Term stepbody = bracket_all(mv, Term::apps(Term::var(kf), next));
                Term step = bracket_all(std::vector<Var>{kf, n2}, stepbody);
                Term rec = Term::apps(Term::constant(ConstKind::Rec, {rho}), {Term::var(n), base, step});
                std::vector<Term> start{numeral(0)};
                for (auto& x : xs) start.push_back(Term::var(x));
                bodies.push_back(Term::apps(rec, start));
            }
        }
        return b.close_all(all, bodies);
    }
    throw InternalError("axiom " + name + " has evars but no extraction case");
}

std::vector<Term> combine_rule(RuleKind rule, const Formula& conclusion, const std::vector<Formula>& premises,
                               const std::vector<std::vector<Term>>& pt, const Context& ctx,
                               const Signature& sig) {
    if (hr_types(conclusion).empty()) return {};
    Builder b(ctx, sig);
    switch (rule) {
    case RuleKind::MP: {
        // premises: A, A -> B
        std::vector<Term> tx;
        for (auto& t : pt[0]) tx.push_back(b.at_ctx(t));
        std::vector<Term> bodies;
        for (auto& u : pt[1]) bodies.push_back(Term::apps(b.at_ctx(u), tx));
        return b.close_all({}, bodies);
    }
    case RuleKind::SYL: {
        // premises: A -> B, B -> C
        auto xs = b.fresh(hr_types(premises[0].left()));
        std::vector<Term> mid;
        for (auto& u : pt[0]) mid.push_back(Term::apps(b.at_ctx(u), terms_of(xs)));
        std::vector<Term> bodies;
        for (auto& q : pt[1]) bodies.push_back(Term::apps(b.at_ctx(q), mid));
        return b.close_all(xs, bodies);
    }
    case RuleKind::OR_MONO: {
        auto ps = b.fresh(hr_types(conclusion.left().left()));
        auto xs = b.fresh(hr_types(premises[0].left()));
        std::vector<Term> bodies = terms_of(ps);
        for (auto& u : pt[0]) bodies.push_back(Term::apps(b.at_ctx(u), terms_of(xs)));
        auto all = ps;
        all.insert(all.end(), xs.begin(), xs.end());
        return b.close_all(all, bodies);
    }
    case RuleKind::EXPORT:
    case RuleKind::IMPORT:
        return pt[0];
    case RuleKind::ALL_INTRO: {
        // B -> A(z)  gives  B -> all z . A
        const Var& z = conclusion.right().var();
        auto us = b.fresh(hr_types(premises[0].left()));
        Var zp = b.fresh(z.type);
        std::vector<Term> bodies;
        for (auto& t : pt[0]) bodies.push_back(Term::apps(b.at_ctx_with(t, z, Term::var(zp)), terms_of(us)));
        auto all = us;
        all.push_back(zp);
        return b.close_all(all, bodies);
    }
    case RuleKind::EX_ELIM: {
        // A(z) -> B  gives  ex z . A -> B
        const Var& z = conclusion.left().var();
        Var zs = b.fresh(Type::star(z.type));
        auto xs = b.fresh(hr_types(premises[0].left()));
        auto tau = hr_types(premises[0].right());
        std::vector<Term> bodies;
        for (std::size_t i = 0; i < pt[0].size(); ++i) {
            Var w = b.fresh(z.type);
            Term inner = Term::apps(b.at_ctx_with(pt[0][i], z, Term::var(w)), terms_of(xs));
            bodies.push_back(big_sqcup(Term::var(zs), bracket(w, inner), tau[i]));
        }
        std::vector<Var> all{zs};
        all.insert(all.end(), xs.begin(), xs.end());
        return b.close_all(all, bodies);
    }
    }
    throw InternalError("unreachable");
}

RealizerBundle extract(const ProofScript& p) {
    CheckResult check = check_proof(p);
    if (!check.ok()) {
        const auto& e = check.errors.front();
        throw Error("proof does not check: line " + std::to_string(e.line) + ": " + e.message);
    }
    RealizerBundle out{p.ctx, {}};
    for (auto& l : p.lines) {
        LineRealizers lr;
        lr.number = l.number;
        lr.hr = hr_translate(l.formula);
        const Justification& j = l.just;
        switch (j.kind) {
        case Justification::Kind::Axiom: {
            Formula inst = axiom_instance(j.name, j.params, p.sig, l.formula);
            lr.terms = extract_axiom(j.name, j.params, inst, p.ctx, p.sig);
            lr.provenance = "axiom " + j.name;
            break;
        }
        case Justification::Kind::Assumption:
            lr.provenance = "assumption " + j.name;
            break;
        case Justification::Kind::Rule: {
            RuleKind r = *find_rule(j.name);
            std::vector<Formula> prem;
            std::vector<std::vector<Term>> pt;
            for (int k : j.premises) {
                prem.push_back(p.line(k)->formula);
                pt.push_back(out.line(k)->terms);
            }
            lr.terms = combine_rule(r, l.formula, prem, pt, p.ctx, p.sig);
            lr.provenance = "rule " + j.name;
            break;
        }
        }
        if (lr.terms.size() != lr.hr.evars.size())
            throw InternalError("line " + std::to_string(l.number) + ": " + std::to_string(lr.terms.size()) +
                                " realizers for " + std::to_string(lr.hr.evars.size()) + " evars");
        for (std::size_t i = 0; i < lr.terms.size(); ++i) {
            const Term& t = lr.terms[i];
            Type want = realizer_type(p.ctx, lr.hr.evars[i].type);
            if (!t.is_closed() || t.type() != want)
                throw InternalError("line " + std::to_string(l.number) + ": realizer " + std::to_string(i) +
                                    " has type " + to_string(t.type()) + ", expected " + to_string(want));
        }
        out.lines.push_back(std::move(lr));
    }
    return out;
}

} // namespace hmr
