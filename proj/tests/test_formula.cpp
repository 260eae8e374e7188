#include <doctest.h>

#include "helpers.hpp"
#include "hmr/error.hpp"

using namespace hmr;
using namespace th;

namespace {

bool mentions(const std::vector<std::string>& diags, const std::string& needle) {
    for (auto& d : diags)
        if (d.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("well-formedness") {
    Var x{"x", N()};
    Var s{"s", star(N())};
    // all x in (SET x) . x = x
    Term bad_bound = Term::app(Term::constant(ConstKind::Sing, {N()}), Term::var(x));
    Formula a = Formula::bforall(x, bad_bound, Formula::eq(N(), Term::var(x), Term::var(x)));
    CHECK(mentions(well_formed(a, {}, arith()), "bound mentions bound variable 'x'"));

    CHECK(well_formed(formula("0 = SUC 0 : N"), {}, arith()).empty());
    CHECK(mentions(well_formed(Formula::mem(N(), numeral(0), numeral(0)), {}, arith()), "set side must have type N*"));
    CHECK(mentions(well_formed(Formula::eq(N(), Term::var(x), numeral(0)), {}, arith()), "unbound variable 'x'"));
    CHECK(well_formed(Formula::eq(N(), Term::var(x), numeral(0)), Context({x}), arith()).empty());
    CHECK(mentions(well_formed(Formula::bforall(x, Term::var(x), Formula::bot()), Context({x}), arith()),
                   "must have type N*"));
    CHECK(well_formed(Formula::bexists(x, Term::var(s), Formula::bot()), Context({s}), arith()).empty());

    Signature sig = logic();
    CHECK(mentions(well_formed(Formula::rel("P", {term("a", sig), term("b", sig)}), {}, sig), "expects 1"));
    CHECK(mentions(well_formed(Formula::rel("Z", {term("a", sig)}), {}, sig), "unknown relation"));
    CHECK(mentions(well_formed(Formula::eq(N(), numeral(0), numeral(0)), {}, sig), "does not belong"));
}

TEST_CASE("exists-freeness") {
    CHECK(is_exists_free(formula("all x:N . (ex y in (SET[N] x) . y = x : N) -> bot")));
    CHECK(is_exists_free(formula("all x:N . x = x : N -> bot")));
    CHECK_FALSE(is_exists_free(formula("ex x:N . x = 0 : N")));
    CHECK_FALSE(is_exists_free(formula("(ex x:N . x = 0 : N) -> bot")));
    CHECK(is_exists_free(Formula::bot()));
}

TEST_CASE("substitution in formulas") {
    Var x{"x", N()}, y{"y", N()};
    Context ctx({x, y});
    Formula a = formula("x = 0 : N", arith(), ctx);
    CHECK(subst_formula(a, x, numeral(1)) == formula("1 = 0 : N"));
    Formula q = formula("all x:N . x = 0 : N");
    CHECK(subst_formula(q, x, numeral(1)) == q);

    // (ex y. y = x)[y/x] renames the binder
    Formula e = formula("ex y:N . y = x : N", arith(), ctx);
    Formula r = subst_formula(e, x, Term::var(y));
    REQUIRE(r.kind() == Formula::Kind::Exists);
    CHECK(r.var().name != "y");
    CHECK(r.body() == Formula::eq(N(), Term::var(r.var()), Term::var(y)));
    CHECK(alpha_equal(r, formula("ex z:N . z = y : N", arith(), ctx)));
    CHECK_THROWS_AS(subst_formula(a, x, term("SET[N] 0")), TypeError);
}

TEST_CASE("free variables") {
    Var x{"x", N()}, y{"y", N()}, t{"t", star(N())};
    Context ctx({x, y, t});
    auto fv = free_vars(formula("all x in t . x = y : N", arith(), ctx));
    CHECK(fv == std::vector<Var>{t, y});
    CHECK(free_vars(Formula::bot()).empty());
    CHECK(free_vars(formula("ex x:N . x = x : N")).empty());
    CHECK(occurs_free(y, formula("ex x:N . x = y : N", arith(), ctx)));
    CHECK_FALSE(occurs_free(x, formula("ex x:N . x = y : N", arith(), ctx)));
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_equal(formula("all x:N . ex y:N . x = y : N"), formula("all a:N . ex b:N . a = b : N")));
    CHECK_FALSE(alpha_equal(formula("all x:N . ex y:N . x = y : N"), formula("all a:N . ex b:N . b = a : N")));
    CHECK_FALSE(alpha_equal(formula("all x:N . x = x : N"), formula("ex x:N . x = x : N")));
    CHECK_FALSE(alpha_equal(formula("all x:N . x = x : N"), formula("all x:N* . x = x : N*")));
}

TEST_CASE("printing") {
    CHECK(to_string(formula("ex z:N . z = 0 : N")) == "ex z:N . z = 0 : N");
    CHECK(to_string(formula("(0 = 0 : N -> bot) -> bot")) == "(0 = 0 : N -> bot) -> bot");
    CHECK(to_string(formula("0 = 0 : N -> 1 = 1 : N -> bot")) == "0 = 0 : N -> 1 = 1 : N -> bot");
    CHECK(to_string(formula("(0 = 0 : N | bot) & bot")) == "(0 = 0 : N | bot) & bot");
    CHECK(to_string(formula("SUC = SUC : (N->N)")) == "SUC = SUC : (N->N)");
    CHECK(to_string(formula("(ex x:N . bot) & bot")) == "(ex x:N . bot) & bot");
}
