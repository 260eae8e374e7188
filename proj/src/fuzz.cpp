#include "hmr/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "hmr/abstraction.hpp"
#include "hmr/error.hpp"
#include "hmr/gen.hpp"
#include "hmr/hr.hpp"
#include "hmr/rewrite.hpp"
#include "hmr/syntax.hpp"
#include "hmr/verify.hpp"

namespace hmr {

namespace {

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void fail(PropertyResult& r, const std::string& what) {
    if (r.failures++ == 0) r.first_failure = what;
}

// The same seed gives the same corpus for normalization and confluence.
std::vector<Term> term_corpus(const FuzzOptions& o) {
    gen::Generator g(o.seed);
    std::vector<Term> out;
    for (std::size_t i = 0; i < o.cases; ++i) out.push_back(g.closed_term(o.max_size, o.max_depth));
    return out;
}

} // namespace

PropertyResult fuzz_normalization(const FuzzOptions& o) {
    PropertyResult r{"normalization"};
    Timer timer;
    for (auto& t : term_corpus(o)) {
        ++r.cases;
        ReductionTrace trace;
        try {
            normalize(t, o.budget, &trace);
            r.max_steps = std::max(r.max_steps, trace.budget_used);
        } catch (const BudgetExhausted&) {
            fail(r, "budget exhausted on " + to_string(t));
        }
    }
    r.seconds = timer.seconds();
    return r;
}

PropertyResult fuzz_confluence(const FuzzOptions& o) {
    PropertyResult r{"confluence"};
    Timer timer;
    for (auto& t : term_corpus(o)) {
        ++r.cases;
        try {
            Term lo = normalize(t, o.budget);
            std::size_t steps = 0;
            Term ri = normalize_innermost(t, o.budget, &steps);
            r.max_steps = std::max(r.max_steps, steps);
            if (lo != ri) fail(r, "normal forms differ for " + to_string(t));
        } catch (const BudgetExhausted&) {
            fail(r, "budget exhausted on " + to_string(t));
        }
    }
    r.seconds = timer.seconds();
    return r;
}

PropertyResult fuzz_normal_shapes(const FuzzOptions& o) {
    PropertyResult r{"normal-shapes"};
    Timer timer;
    gen::Generator g(o.seed + 1);
    const Type nat = Type::ground("N");
    std::size_t stars = 0, nats = 0;
    for (std::size_t i = 0; i < 2 * o.cases; ++i) {
        bool star = i % 2 == 0;
        Type t = star ? Type::star(g.type(std::max(0, o.max_depth - 1))) : nat;
        Term s = g.closed(t, 2 + g.below(std::max(1, o.max_size / 3)));
        if (s.size() > static_cast<std::uint64_t>(o.max_size)) {
            --i;
            continue;
        }
        ++r.cases;
        try {
            Term n = normalize(s, o.budget);
            if (star) {
                ++stars;
                if (!is_set_like(n) || surface_elements(n).empty()) fail(r, "not set-like: " + to_string(n));
            } else {
                ++nats;
                if (!numeral_value(n)) fail(r, "not a numeral: " + to_string(n));
            }
        } catch (const BudgetExhausted&) {
            fail(r, "budget exhausted on " + to_string(s));
        }
    }
    r.detail = std::to_string(stars) + " star-typed, " + std::to_string(nats) + " N-typed";
    r.seconds = timer.seconds();
    return r;
}

PropertyResult fuzz_bracket(const FuzzOptions& o) {
    PropertyResult r{"bracket"};
    Timer timer;
    gen::Generator g(o.seed + 2);
    for (std::size_t i = 0; i < o.cases; ++i) {
        ++r.cases;
        Var x = g.fresh(g.type(2));
        Var y = g.fresh(g.type(1));
        Type t = g.type(2);
        Term body = g.open(t, 2 + g.below(12), {x, y});
        Term s = g.closed(x.type, 1 + g.below(6));
        try {
            Term lhs = normalize(Term::app(bracket(x, body), s), o.budget);
            Term rhs = normalize(subst_term(body, x, s), o.budget);
            if (lhs != rhs) fail(r, "[" + x.name + "]" + to_string(body) + " applied to " + to_string(s));
            if (occurs(x, bracket(x, body))) fail(r, "variable survives abstraction in " + to_string(body));
        } catch (const BudgetExhausted&) {
            fail(r, "budget exhausted on " + to_string(body));
        }
    }
    r.seconds = timer.seconds();
    return r;
}

PropertyResult fuzz_hr(const FuzzOptions& o) {
    PropertyResult r{"hr-invariants"};
    Timer timer;
    gen::Generator g(o.seed + 3);
    Signature sig = Signature::arithmetic();
    std::size_t exists_free = 0;
    for (std::size_t i = 0; i < o.cases; ++i) {
        ++r.cases;
        Formula a = g.formula(1 + g.below(4));
        auto diags = well_formed(a, {}, sig);
        if (!diags.empty()) {
            fail(r, "generator produced ill-formed " + to_string(a) + ": " + diags.front());
            continue;
        }
        HRResult h = hr_translate(a, o.seed + i);
        for (auto& e : h.evars)
            if (!is_end_star(e.type)) fail(r, "evar " + e.name + " not end-star in " + to_string(a));
        if (!is_exists_free(h.matrix)) fail(r, "matrix not ex-free for " + to_string(a));
        if (is_exists_free(a)) {
            ++exists_free;
            if (!h.evars.empty() || h.matrix != a) fail(r, "ex-free input changed: " + to_string(a));
        }
        std::vector<Var> fv = free_vars(h.matrix);
        std::erase_if(fv, [&](const Var& v) { return std::find(h.evars.begin(), h.evars.end(), v) != h.evars.end(); });
        if (!fv.empty()) fail(r, "matrix has extra free variable " + fv.front().name + " for " + to_string(a));
        Context ctx(h.evars);
        auto mdiags = well_formed(h.matrix, ctx, sig);
        if (!mdiags.empty()) fail(r, "ill-formed matrix for " + to_string(a) + ": " + mdiags.front());
    }
    r.detail = std::to_string(exists_free) + " ex-free inputs";
    r.seconds = timer.seconds();
    return r;
}

PropertyResult fuzz_monotonicity(const FuzzOptions& o) {
    PropertyResult r{"monotonicity"};
    Timer timer;
    gen::Generator g(o.seed + 4);
    const Type nstar = Type::star(Type::ground("N"));
    std::size_t nontrivial = 0;
    for (std::size_t i = 0; i < o.cases; ++i) {
        Formula a = g.monotone_formula(1 + g.below(4));
        HRResult h = hr_translate(a);
        bool all_nstar = std::all_of(h.evars.begin(), h.evars.end(), [&](const Var& v) { return v.type == nstar; });
        if (!all_nstar) {
            fail(r, "generator produced evars outside N*: " + to_string(h));
            continue;
        }
        ++r.cases;
        std::vector<Term> x, x2;
        for (std::size_t k = 0; k < h.evars.size(); ++k) {
            x.push_back(g.numeral_set(3, 4));
            Term bigger = x.back();
            if (g.coin(0.7))
                bigger = Term::apps(Term::constant(ConstKind::Cup, {Type::ground("N")}), {bigger, g.numeral_set(3, 4)});
            x2.push_back(bigger);
        }
        try {
            EvalVerdict before = eval_formula(hr_matrix_instantiate(h, x));
            if (before.is_true()) ++nontrivial;
            EvalVerdict v = monotonicity_probe(h, x, x2);
            if (!v.is_true())
                fail(r, std::string(truth_name(v.value)) + " for " + to_string(a) + " " + v.reason);
        } catch (const Error& e) {
            fail(r, std::string(e.what()) + " for " + to_string(a));
        }
    }
    r.detail = std::to_string(nontrivial) + " with true antecedent";
    r.seconds = timer.seconds();
    return r;
}

PropertyResult fuzz_roundtrip(const FuzzOptions& o) {
    PropertyResult r{"roundtrip"};
    Timer timer;
    gen::Generator g(o.seed + 5);
    Signature sig = Signature::arithmetic();
    for (std::size_t i = 0; i < o.cases; ++i) {
        ++r.cases;
        Term t = g.closed_term(o.max_size, o.max_depth);
        try {
            if (parse_term(to_string(t), sig) != t) fail(r, "term changed: " + to_string(t));
        } catch (const ParseError& e) {
            fail(r, "term " + to_string(t) + ": " + e.what());
        }
        Formula a = g.formula(1 + g.below(4));
        try {
            if (parse_formula(to_string(a), sig) != a) fail(r, "formula changed: " + to_string(a));
        } catch (const ParseError& e) {
            fail(r, "formula " + to_string(a) + ": " + e.what());
        }
    }
    r.seconds = timer.seconds();
    return r;
}

std::vector<PropertyResult> fuzz_all(const FuzzOptions& o) {
    return {fuzz_normalization(o), fuzz_confluence(o), fuzz_normal_shapes(o), fuzz_bracket(o),
            fuzz_hr(o),            fuzz_monotonicity(o), fuzz_roundtrip(o)};
}

std::string summary_line(const PropertyResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
    std::string out = (r.ok() ? "ok   " : "FAIL ") + r.name + ": " + std::to_string(r.cases) + " cases, " +
                      std::to_string(r.failures) + " failures, max steps " + std::to_string(r.max_steps) + ", " + buf;
    if (!r.detail.empty()) out += " (" + r.detail + ")";
    if (!r.first_failure.empty()) out += "\n     first failure: " + r.first_failure;
    return out;
}

} // namespace hmr
