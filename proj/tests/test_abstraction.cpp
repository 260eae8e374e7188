#include <doctest.h>

#include "helpers.hpp"
#include "hmr/abstraction.hpp"
#include "hmr/gen.hpp"
#include "hmr/rewrite.hpp"
#include "oracle.hpp"

using namespace hmr;
using namespace th;

namespace {

Term app_nf(const Term& f, std::initializer_list<Term> args) { return normalize(Term::apps(f, args)); }

} // namespace

TEST_CASE("bracket abstraction basics") {
    Signature sig = logic();
    Term c = term("c", sig), d = term("d", sig);
    Var x{"x", G()};
    Term f = Term::var("f", arr(G(), G()));
    CHECK(app_nf(bracket(x, Term::var(x)), {c}) == c);
    CHECK(app_nf(bracket(x, c), {d}) == c);
    Term fx = Term::app(f, Term::var(x));
    CHECK(normalize(Term::app(bracket(x, fx), c)) == Term::app(f, c));
    CHECK(identity_combinator(G()).is_closed());
    CHECK(app_nf(identity_combinator(G()), {d}) == d);
    CHECK_FALSE(occurs(x, bracket(x, Term::apps(term("PI[G,G]", sig), {Term::var(x), Term::var(x)}))));
}

TEST_CASE("tuples of abstractions") {
    Signature sig = logic();
    Term c = term("c", sig), d = term("d", sig);
    Var x{"x", G()}, y{"y", G()};
    std::vector<Var> xs{x};
    auto one = bracket_tuple(xs, std::vector{Term::var(x)});
    CHECK(app_nf(one[0], {c}) == c);

    std::vector<Var> xy{x, y};
    auto first = bracket_tuple(xy, std::vector{Term::var(x)});
    CHECK(app_nf(first[0], {c, d}) == c);
    auto swapped = bracket_tuple(xy, std::vector{Term::var(y), Term::var(x)});
    CHECK(app_nf(swapped[0], {c, d}) == d);
    CHECK(app_nf(swapped[1], {c, d}) == c);
    CHECK(bracket_all(xy, Term::var(x)).type() == arr(G(), arr(G(), G())));
}

TEST_CASE("combinatorial completeness on random bodies") {
    gen::Generator g(11);
    for (int i = 0; i < 150; ++i) {
        Var x = g.fresh(g.type(2));
        Term body = g.open(g.type(2), 2 + g.below(10), {x});
        Term s = g.closed(x.type, 1 + g.below(5));
        Term lam = bracket(x, body);
        INFO(to_string(body));
        CHECK_FALSE(occurs(x, lam));
        CHECK(lam.type() == arr(x.type, body.type()));
        CHECK(normalize(Term::app(lam, s)) == normalize(subst_term(body, x, s)));
    }
}

TEST_CASE("pointwise union") {
    Term a = term("SET[N] 0"), b = term("SET[N] 1");
    CHECK(sqcup(a, b, star(N())) == term("CUP[N] (SET[N] 0) (SET[N] 1)"));
    Term f = term("SET[N]"), g = term("\\x:N. SET[N] (SUC x)");
    Term fg = sqcup(f, g, arr(N(), star(N())));
    CHECK(normalize(Term::app(fg, numeral(0))) == term("CUP[N] (SET[N] 0) (SET[N] 1)"));
    CHECK(fg.is_closed());
}

TEST_CASE("big union") {
    Term fam = term("CUP[N] (SET[N] 0) (SET[N] 1)");
    Term f = term("\\w:N. SET[N] (SUC w)");
    CHECK(normalize(big_sqcup(fam, f, star(N()))) == term("CUP[N] (SET[N] 1) (SET[N] 2)"));
    // at sigma = N->N*, (big_sqcup F h) a against BIGCUP F (\w. h w a) built directly
    Term h = term("\\w:N. \\a:N. CUP[N] (SET[N] w) (SET[N] a)");
    Term lifted = big_sqcup(fam, h, arr(N(), star(N())));
    Var w{"w", N()};
    for (std::uint64_t a = 0; a < 3; ++a) {
        Term direct = Term::apps(term("BIGCUP[N,N]"), {fam, bracket(w, Term::apps(h, {Term::var(w), numeral(a)}))});
        Term lhs = normalize(Term::app(lifted, numeral(a)));
        CHECK(lhs == normalize(direct));
        std::vector<std::uint64_t> want{0, 1};
        if (a > 1) want.push_back(a);
        CHECK(oracle::numerals(oracle::denote(lhs)) == want);
    }
}

TEST_CASE("subset check") {
    Term a = term("SET[N] 0"), b = term("CUP[N] (SET[N] 0) (SET[N] 1)");
    auto v = subseteq_check(a, b, star(N()), {});
    CHECK(v.holds);
    CHECK_FALSE(v.probe_limited);
    CHECK_FALSE(subseteq_check(b, a, star(N()), {}).holds);
    CHECK(subseteq_check(b, b, star(N()), {}).holds);

    Term f = term("SET[N]"), g = term("\\x:N. SET[N] (SUC x)");
    std::vector<std::vector<Term>> probe{{numeral(0)}, {numeral(1)}, {numeral(2)}};
    auto w = subseteq_check(f, sqcup(f, g, arr(N(), star(N()))), arr(N(), star(N())), probe);
    CHECK(w.holds);
    CHECK(w.probe_limited);
    CHECK_FALSE(subseteq_check(g, f, arr(N(), star(N())), probe).holds);
}

TEST_CASE("fresh names") {
    CHECK(fresh_name("x", {}) == "x");
    CHECK(fresh_name("x", {"x"}) == "x'");
    CHECK(fresh_name("x", {"x", "x'"}) == "x''");
}
