#include <doctest.h>

#include "helpers.hpp"
#include "hmr/error.hpp"

using namespace hmr;
using namespace th;

TEST_CASE("constant types") {
    Signature sig = logic();
    CHECK(type_of_constant(ConstKind::Pi, {G(), G()}, sig) == arr(G(), arr(G(), G())));
    CHECK(type_of_constant(ConstKind::Sing, {N()}, arith()) == arr(N(), star(N())));
    CHECK(type_of_constant(ConstKind::Rec, {N()}, arith()) ==
          arr(N(), arr(N(), arr(arr(N(), arr(N(), N())), N()))));
    CHECK(to_string(type_of_constant(ConstKind::BigCup, {N(), N()}, arith())) == "N*->(N->N*)->N*");
    CHECK(to_string(type_of_constant(ConstKind::Sigma, {N(), N(), N()}, arith())) == "(N->N->N)->(N->N)->N->N");
}

TEST_CASE("typecheck") {
    Signature sig = logic();
    Var x{"x", star(G())}, f{"f", arr(G(), star(G()))};
    Term big = Term::apps(Term::constant(ConstKind::BigCup, {G(), G()}), {Term::var(x), Term::var(f)});
    CHECK(typecheck(big, Context({x, f})) == star(G()));

    Term c = Term::user_constant("c", G());
    CHECK(Term::app(Term::constant(ConstKind::Pi, {G(), G()}), c).type() == arr(G(), G()));

    Term g = Term::var("g", arr(G(), G()));
    CHECK_THROWS_AS(Term::app(Term::constant(ConstKind::Sing, {G()}), g), TypeError);
    CHECK_THROWS_AS(typecheck(big, Context({x})), UnboundVariable);
}

TEST_CASE("end-star types") {
    CHECK(is_end_star(star(G())));
    CHECK(is_end_star(arr(G(), star(G()))));
    CHECK(is_end_star(arr(arr(N(), N()), arr(N(), star(arr(N(), N()))))));
    CHECK_FALSE(is_end_star(arr(G(), G())));
    CHECK_FALSE(is_end_star(N()));
}

TEST_CASE("type printing") {
    CHECK(to_string(arr(N(), star(N()))) == "N->N*");
    CHECK(to_string(star(arr(N(), N()))) == "(N->N)*");
    CHECK(to_string(arr(arr(N(), N()), N())) == "(N->N)->N");
    CHECK(to_string(star(star(N()))) == "N**");
    CHECK(parse_type("(N->N)*->N") == arr(star(arr(N(), N())), N()));
    CHECK(star(arr(N(), N())).depth() == 2);
}

TEST_CASE("substitution") {
    Signature sig = logic();
    Var x{"x", G()}, y{"y", G()};
    Term c = Term::user_constant("c", G());
    Term pi = Term::constant(ConstKind::Pi, {G(), G()});
    CHECK(subst_term(Term::apps(pi, {Term::var(x), Term::var(y)}), x, c) == Term::apps(pi, {c, Term::var(y)}));
    CHECK(subst_term(Term::var(x), x, c) == c);
    Term sy = Term::app(Term::constant(ConstKind::Sing, {G()}), Term::var(y));
    CHECK(subst_term(sy, x, c) == sy);
    CHECK(subst_term(sy, x, c).same_node(sy));
    CHECK_THROWS_AS(subst_term(sy, y, Term::var("n", N())), TypeError);
}

TEST_CASE("numerals") {
    CHECK(to_string(numeral(3)) == "3");
    CHECK(numeral_value(numeral(7)) == 7u);
    CHECK(numeral(2) == term("SUC (SUC 0)"));
    CHECK_FALSE(numeral_value(term("PI[N,N] 0 1")));
}

TEST_CASE("term structure") {
    Term t = term("SIG[N,N,N] PI[N,N] SUC 4");
    CHECK(t.head() == Term::constant(ConstKind::Sigma, {N(), N(), N()}));
    CHECK(t.arg_count() == 3);
    CHECK(t.spine_args().back() == numeral(4));
    CHECK(t.is_redex());
    CHECK_FALSE(t.is_normal());
    CHECK(t.is_closed());
    CHECK(t.size() == 8); // atoms: SIG, PI, SUC, four SUCs and ZERO
    CHECK(term("SET[N] (PI[N,N] 1 2)").is_normal() == false);
    CHECK(term("CUP[N] (SET[N] 1)").is_normal());
}

TEST_CASE("signatures") {
    CHECK_THROWS_AS(parse_signature("const a : N;"), ParseError);
    CHECK_THROWS_AS(parse_signature("fun f / 1;"), ParseError);
    CHECK_THROWS_AS(parse_signature("mode logic; rel P / 1; rel P / 2;"), ParseError);
    CHECK_THROWS_AS(parse_signature("mode logic; rel P / 1;"), ParseError); // no constant
    Signature bare(Mode::Logic);
    CHECK_THROWS_AS(bare.validate(), TypeError);
    Signature sig = parse_signature("mode logic; const a : G; fun f / 2; rel P / 1;");
    CHECK_NOTHROW(sig.validate());
    CHECK(typecheck(term("f a (f a a)", sig), {}) == G());
    CHECK(parse_signature(signature_text(sig)).functions().size() == 2);
    CHECK(inhabitant(arr(N(), star(N())), arith()).type() == arr(N(), star(N())));
}
