#include "hmr/rewrite.hpp"

#include <cstdlib>
#include <sstream>

#include "hmr/error.hpp"

namespace hmr {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::Sigma: return "SIG";
    case Rule::Pi: return "PI";
    case Rule::BigCupSing: return "BIGCUP-SET";
    case Rule::BigCupCup: return "BIGCUP-CUP";
    case Rule::RecZero: return "REC-ZERO";
    case Rule::RecSuc: return "REC-SUC";
    }
    return "?";
}

std::string ReductionTrace::dump() const {
    std::ostringstream out;
    for (auto& s : steps) out << s.position << ' ' << rule_name(s.rule) << ' ' << to_string(s.result) << '\n';
    return out.str();
}

Term contract(const Term& redex, Rule* applied) {
    if (!redex.is_redex()) throw InternalError("contract called on a non-redex: " + to_string(redex));
    const Term& h = redex.head();
    std::vector<Term> a = redex.spine_args();
    auto set = [&](Rule r) {
        if (applied) *applied = r;
    };
    switch (h.const_kind()) {
    case ConstKind::Sigma: // SIG t q r ~> t r (q r)
        set(Rule::Sigma);
        return Term::app(Term::app(a[0], a[2]), Term::app(a[1], a[2]));
    case ConstKind::Pi: // PI t q ~> t
        set(Rule::Pi);
        return a[0];
    case ConstKind::BigCup: {
        const Term& first = a[0];
        if (first.head().const_kind() == ConstKind::Sing) { // BIGCUP (SET t) q ~> q t
            set(Rule::BigCupSing);
            return Term::app(a[1], first.arg());
        }
        // BIGCUP (CUP t q) r ~> CUP (BIGCUP t r) (BIGCUP q r)
        set(Rule::BigCupCup);
        const Term& t = first.fun().arg();
        const Term& q = first.arg();
        Term bigcup = h;
        Term cup = Term::constant(ConstKind::Cup, {h.indices()[1]});
        return Term::apps(cup, {Term::apps(bigcup, {t, a[1]}), Term::apps(bigcup, {q, a[1]})});
    }
    case ConstKind::Rec: {
        const Term& n = a[0];
        if (n.is_const()) { // REC 0 q r ~> q
            set(Rule::RecZero);
            return a[1];
        }
        // REC (S t) q r ~> r (REC t q r) t
        set(Rule::RecSuc);
        const Term& t = n.arg();
        return Term::apps(a[2], {Term::apps(h, {t, a[1], a[2]}), t});
    }
    default:
        break;
    }
    throw InternalError("no conversion for head " + to_string(h));
}

namespace {

std::optional<Term> step_at(const Term& t, std::string& path, Rule& rule) {
    if (t.is_normal()) return std::nullopt;
    if (t.is_redex()) return contract(t, &rule);
    // neither normal nor a redex, so t is an application
    path.push_back('f');
    if (auto f = step_at(t.fun(), path, rule)) return Term::app(std::move(*f), t.arg());
    path.back() = 'a';
    if (auto a = step_at(t.arg(), path, rule)) return Term::app(t.fun(), std::move(*a));
    path.pop_back();
    throw InternalError("non-normal term without a redex: " + to_string(t));
}

std::string tail_of(const ReductionTrace& trace, std::size_t n) {
    std::ostringstream out;
    std::size_t from = trace.steps.size() > n ? trace.steps.size() - n : 0;
    for (std::size_t i = from; i < trace.steps.size(); ++i) {
        const Step& s = trace.steps[i];
        std::string term = to_string(s.result);
        if (term.size() > 200) term = term.substr(0, 200) + "...";
        out << s.position << ' ' << rule_name(s.rule) << ' ' << term << '\n';
    }
    return out.str();
}

} // namespace

std::optional<Step> step(const Term& t) {
    std::string path = "@";
    Rule rule{};
    auto r = step_at(t, path, rule);
    if (!r) return std::nullopt;
    return Step{std::move(path), rule, std::move(*r)};
}

Term normalize(const Term& t, std::size_t budget, ReductionTrace* trace) {
    Term cur = t;
    std::size_t used = 0;
    ReductionTrace local;
    // keep a short tail for diagnostics even when no trace is requested
    ReductionTrace& tr = trace ? *trace : local;
    tr.start = t;
    while (!cur.is_normal()) {
        if (used == budget) {
            tr.budget_used = used;
            throw BudgetExhausted("normalization budget of " + std::to_string(budget) + " steps exhausted",
                                  tail_of(tr, 8));
        }
        auto s = step(cur);
        cur = s->result;
        ++used;
        if (trace) {
            tr.steps.push_back(std::move(*s));
        } else {
            local.steps.push_back(std::move(*s));
            if (local.steps.size() > 16) local.steps.erase(local.steps.begin(), local.steps.begin() + 8);
        }
    }
    tr.budget_used = used;
    return cur;
}

namespace {

struct Innermost {
    std::size_t budget;
    std::size_t used = 0;

    Term run(const Term& t) {
        Term cur = t;
        while (true) {
            if (cur.is_normal() || !cur.is_app()) return cur;
            // normalize arguments right to left, then look at the head
            Term h = cur.head();
            std::vector<Term> args = cur.spine_args();
            for (std::size_t i = args.size(); i-- > 0;) args[i] = run(args[i]);
            Term rebuilt = h;
            std::size_t i = 0;
            std::optional<Term> contracted;
            for (; i < args.size(); ++i) {
                rebuilt = Term::app(std::move(rebuilt), args[i]);
                if (rebuilt.is_redex()) {
                    if (used == budget)
                        throw BudgetExhausted("innermost normalization budget of " + std::to_string(budget) +
                                                  " steps exhausted",
                                              "");
                    ++used;
                    contracted = contract(rebuilt);
                    ++i;
                    break;
                }
            }
            if (!contracted) return rebuilt;
            Term next = std::move(*contracted);
            for (; i < args.size(); ++i) next = Term::app(std::move(next), args[i]);
            cur = std::move(next);
        }
    }
};

} // namespace

Term normalize_innermost(const Term& t, std::size_t budget, std::size_t* steps) {
    Innermost ri{budget};
    Term out = ri.run(t);
    if (steps) *steps += ri.used;
    return out;
}

bool WitnessSet::insert(const Term& t) {
    if (contains(t)) return false;
    elements_.push_back(t);
    return true;
}

bool WitnessSet::contains(const Term& t) const {
    for (auto& e : elements_)
        if (e == t) return true;
    return false;
}

namespace {

bool is_sing(const Term& t) {
    return t.is_app() && t.arg_count() == 1 && t.head().is_const() && t.head().const_kind() == ConstKind::Sing;
}

bool is_cup(const Term& t) {
    return t.is_app() && t.arg_count() == 2 && t.head().is_const() && t.head().const_kind() == ConstKind::Cup;
}

void collect_surface(const Term& t, WitnessSet& out) {
    if (is_sing(t)) {
        out.insert(t.arg());
    } else if (is_cup(t)) {
        collect_surface(t.fun().arg(), out);
        collect_surface(t.arg(), out);
    }
}

void require_star(const Term& t, const char* op) {
    if (!t.type().is_star())
        throw TypeError(std::string(op) + " expects a star-typed term, got " + to_string(t.type()));
}

} // namespace

WitnessSet surface_elements(const Term& t) {
    require_star(t, "surface_elements");
    WitnessSet out;
    collect_surface(t, out);
    return out;
}

bool is_set_like(const Term& t) {
    require_star(t, "is_set_like");
    if (is_sing(t)) return true;
    if (is_cup(t)) return is_set_like(t.fun().arg()) && is_set_like(t.arg());
    return false;
}

WitnessSet enumerate_set(const Term& t, std::size_t budget) {
    require_star(t, "enumerate_set");
    if (!t.is_closed()) throw TypeError("enumerate_set expects a closed term, got " + to_string(t));
    Term n = normalize(t, budget);
    if (!is_set_like(n)) throw InternalError("closed normal star term is not set-like: " + to_string(n));
    WitnessSet out;
    // surface elements of a normal term are normal already
    for (auto& e : surface_elements(n)) out.insert(e);
    if (out.empty()) throw InternalError("empty enumeration for " + to_string(n));
    return out;
}

std::optional<std::uint64_t> as_numeral(const Term& t, std::size_t budget) {
    if (t.type() != Type::ground("N")) throw TypeError("as_numeral expects type N, got " + to_string(t.type()));
    if (!t.is_closed()) throw TypeError("as_numeral expects a closed term, got " + to_string(t));
    return numeral_value(normalize(t, budget));
}

std::size_t default_budget() {
    if (const char* env = std::getenv("HMR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultBudget;
}

} // namespace hmr
