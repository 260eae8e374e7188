#include "hmr/verify.hpp"

#include "hmr/abstraction.hpp"
#include "hmr/error.hpp"

namespace hmr {

const char* truth_name(Truth t) {
    switch (t) {
    case Truth::True: return "True";
    case Truth::False: return "False";
    case Truth::Undecidable: return "Undecidable";
    }
    return "?";
}

void Model::add_row(const std::string& rel, const std::vector<Term>& row) {
    std::vector<Term> normal;
    for (auto& t : row) {
        if (!t.is_closed()) throw TypeError("relation table entries must be closed: " + to_string(t));
        normal.push_back(normalize(t));
    }
    tables_[rel].push_back(std::move(normal));
}

std::optional<bool> Model::holds(const std::string& rel, const std::vector<Term>& normal_args) const {
    auto it = tables_.find(rel);
    if (it == tables_.end()) return std::nullopt;
    for (auto& row : it->second)
        if (row == normal_args) return true;
    return false;
}

std::uint64_t eval_term_nat(const Term& t, std::size_t budget) {
    auto n = as_numeral(t, budget);
    if (!n) throw InternalError("closed N-typed term did not normalize to a numeral: " + to_string(t));
    return *n;
}

namespace {

EvalVerdict from_bool(bool b) { return b ? EvalVerdict::yes() : EvalVerdict::no(); }

struct Evaluator {
    const Model& model;
    std::size_t budget;

    EvalVerdict equal(const Type& rho, const Term& a, const Term& b) {
        switch (rho.kind()) {
        case Type::Kind::Ground:
            return from_bool(normalize(a, budget) == normalize(b, budget));
        case Type::Kind::Arrow: {
            if (normalize(a, budget) == normalize(b, budget)) return EvalVerdict::yes();
            return EvalVerdict::undecidable("equality at arrow type " + to_string(rho));
        }
        case Type::Kind::Star: {
            WitnessSet xs = enumerate_set(a, budget);
            WitnessSet ys = enumerate_set(b, budget);
            EvalVerdict l = included(rho.element(), xs, ys);
            if (l.is_false()) return l;
            EvalVerdict r = included(rho.element(), ys, xs);
            if (r.is_false()) return r;
            if (l.is_true() && r.is_true()) return EvalVerdict::yes();
            return l.is_true() ? r : l;
        }
        }
        throw InternalError("unreachable");
    }

    EvalVerdict member(const Type& rho, const Term& e, const WitnessSet& set) {
        std::optional<EvalVerdict> unknown;
        for (auto& y : set.elements()) {
            EvalVerdict v = equal(rho, e, y);
            if (v.is_true()) return v;
            if (!v.is_false() && !unknown) unknown = v;
        }
        return unknown ? *unknown : EvalVerdict::no();
    }

    EvalVerdict included(const Type& rho, const WitnessSet& xs, const WitnessSet& ys) {
        std::optional<EvalVerdict> unknown;
        for (auto& x : xs.elements()) {
            EvalVerdict v = member(rho, x, ys);
            if (v.is_false()) return v;
            if (!v.is_true() && !unknown) unknown = v;
        }
        return unknown ? *unknown : EvalVerdict::yes();
    }

    EvalVerdict eval(const Formula& a) {
        using K = Formula::Kind;
        switch (a.kind()) {
        case K::Bot:
            return EvalVerdict::no();
        case K::Eq:
            return equal(a.rho(), a.lhs(), a.rhs());
        case K::Mem:
            return member(a.rho(), a.lhs(), enumerate_set(a.rhs(), budget));
        case K::Rel: {
            std::vector<Term> args;
            for (auto& t : a.args()) args.push_back(normalize(t, budget));
            auto h = model.holds(a.rel_name(), args);
            if (!h) return EvalVerdict::undecidable("no table for relation " + a.rel_name());
            return from_bool(*h);
        }
        case K::And: {
            EvalVerdict l = eval(a.left());
            if (l.is_false()) return l;
            EvalVerdict r = eval(a.right());
            if (r.is_false()) return r;
            return l.is_true() ? r : l;
        }
        case K::Or: {
            EvalVerdict l = eval(a.left());
            if (l.is_true()) return l;
            EvalVerdict r = eval(a.right());
            if (r.is_true()) return r;
            return l.is_false() ? r : l;
        }
        case K::Imp: {
            EvalVerdict l = eval(a.left());
            if (l.is_false()) return EvalVerdict::yes();
            EvalVerdict r = eval(a.right());
            if (r.is_true()) return r;
            return l.is_true() ? r : l;
        }
        case K::Forall:
        case K::Exists:
            return EvalVerdict::undecidable("unbounded quantifier over " + a.var().name);
        case K::BForall:
        case K::BExists: {
            bool universal = a.kind() == K::BForall;
            std::optional<EvalVerdict> unknown;
            for (auto& e : enumerate_set(a.bound(), budget)) {
                EvalVerdict v = eval(subst_formula(a.body(), a.var(), e));
                if (universal ? v.is_false() : v.is_true()) return v;
                if (v.value == Truth::Undecidable && !unknown) unknown = v;
            }
            if (unknown) return *unknown;
            return universal ? EvalVerdict::yes() : EvalVerdict::no();
        }
        }
        throw InternalError("unreachable");
    }
};

} // namespace

EvalVerdict eval_formula(const Formula& a, const Model& model, std::size_t budget) {
    auto fv = free_vars(a);
    if (!fv.empty()) throw TypeError("eval_formula expects a closed formula; '" + fv.front().name + "' is free");
    return Evaluator{model, budget}.eval(a);
}

EvalVerdict check_realizer(const Formula& a, const Context& ctx, std::span<const Term> values,
                           std::span<const Term> realizers, const Model& model, std::size_t budget) {
    if (values.size() != ctx.size())
        throw TypeError("expected " + std::to_string(ctx.size()) + " context values, got " +
                        std::to_string(values.size()));
    HRResult h = hr_translate(a);
    if (realizers.size() != h.evars.size())
        throw TypeError("expected " + std::to_string(h.evars.size()) + " realizers, got " +
                        std::to_string(realizers.size()));
    std::vector<Term> witnesses;
    for (auto& r : realizers) witnesses.push_back(normalize(Term::apps(r, values), budget));
    Formula m = hr_matrix_instantiate(h, witnesses);
    for (std::size_t i = 0; i < values.size(); ++i) m = subst_formula(m, ctx.vars()[i], values[i]);
    return eval_formula(m, model, budget);
}

EvalVerdict monotonicity_probe(const HRResult& h, std::span<const Term> x, std::span<const Term> x2,
                               const Model& model, std::size_t budget) {
    if (x.size() != h.evars.size() || x2.size() != h.evars.size())
        throw TypeError("witness tuples must match the evars");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!subseteq_check(x[i], x2[i], h.evars[i].type, {}, budget).holds)
            throw Error("monotonicity probe needs x [= x' but component " + std::to_string(i) + " is not included");
    }
    EvalVerdict before = eval_formula(hr_matrix_instantiate(h, x), model, budget);
    if (before.is_false()) return EvalVerdict::yes();
    if (!before.is_true()) return before;
    return eval_formula(hr_matrix_instantiate(h, x2), model, budget);
}

} // namespace hmr
