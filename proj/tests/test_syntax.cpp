#include <doctest.h>

#include "helpers.hpp"
#include "hmr/error.hpp"
#include "hmr/gen.hpp"
#include "hmr/rewrite.hpp"

using namespace hmr;
using namespace th;

TEST_CASE("tokens") {
    auto toks = tokenize("all x' in X#1 . // comment\n x' = 0 : N");
    REQUIRE(toks.size() >= 10);
    CHECK(toks[1].text == "x'");
    CHECK(toks[3].text == "X#1");
    CHECK(toks[5].text == "x'");
    CHECK(toks[5].line == 2);
    CHECK(toks.back().kind == Tok::End);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_term("SUC\n  y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("unbound variable 'y'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_term("SUC SUC"), ParseError);
    CHECK_THROWS_AS(parse_formula("0 = 0"), ParseError);
    CHECK_THROWS_AS(parse_formula("all x:N . x = 0 : N extra"), ParseError);
    CHECK_THROWS_AS(parse_type("N->"), ParseError);
    CHECK_THROWS_AS(parse_term("PI[N] 0"), ParseError);
}

TEST_CASE("lambda sugar is bracket abstraction") {
    Term t = term("\\x:N. \\y:N. SUC x");
    CHECK(t.is_closed());
    CHECK(t.type() == arr(N(), arr(N(), N())));
    CHECK(normalize(Term::apps(t, {numeral(4), numeral(9)})) == numeral(5));
}

TEST_CASE("connective sugar and precedence") {
    CHECK(formula("~ 0 = 1 : N") == Formula::imp(formula("0 = 1 : N"), Formula::bot()));
    Formula a = formula("0 = 0 : N"), b = formula("1 = 1 : N");
    CHECK(formula("0 = 0 : N <-> 1 = 1 : N") == Formula::iff(a, b));
    CHECK(formula("0 = 0 : N & 1 = 1 : N | bot") == Formula::disj(Formula::conj(a, b), Formula::bot()));
    CHECK(formula("bot -> bot -> bot") == Formula::imp(Formula::bot(), Formula::imp(Formula::bot(), Formula::bot())));
    // quantifiers extend as far right as possible
    Formula q = formula("all x:N . x = x : N -> bot");
    CHECK(q.kind() == Formula::Kind::Forall);
    CHECK(formula("(SUC 0) = 1 : N") == formula("SUC 0 = 1 : N"));
}

TEST_CASE("headers") {
    Parser p("mode logic; const a : G; rel P / 1; context x:G, s:G*;\nP(x)");
    p.parse_header();
    CHECK(p.signature().mode() == Mode::Logic);
    CHECK(p.context().size() == 2);
    Formula f = p.formula();
    CHECK(f.kind() == Formula::Kind::Rel);
    CHECK(p.at_end());
    CHECK_THROWS_AS(Parser("context x:N, x:N;").parse_header(), ParseError);
    CHECK(context_text(Context({Var{"x", N()}, Var{"f", arr(N(), star(N()))}})) == "context x:N, f:N->N*;");
    CHECK_THROWS_AS(parse_term("in"), ParseError);
}

TEST_CASE("print-parse round trip on random syntax") {
    gen::Generator g(4);
    for (int i = 0; i < 200; ++i) {
        Term t = g.closed_term(40, 3);
        CHECK(parse_term(to_string(t)) == t);
        Formula a = g.formula(3);
        INFO(to_string(a));
        CHECK(parse_formula(to_string(a)) == a);
        Type ty = g.type(4);
        CHECK(parse_type(to_string(ty)) == ty);
    }
    Signature sig = logic();
    Formula r = formula("all x:G . P(x) -> ex y:G . R(x, y) & y = c : G", sig);
    CHECK(parse_formula(to_string(r), sig) == r);
}
