#include <doctest.h>

#include "helpers.hpp"
#include "hmr/abstraction.hpp"
#include "hmr/gen.hpp"
#include "hmr/hr.hpp"
#include "hmr/verify.hpp"

using namespace hmr;
using namespace th;

TEST_CASE("atomic and ex-free formulas are fixed points") {
    Signature sig = logic();
    Formula p = formula("P(a)", sig);
    HRResult h = hr_translate(p);
    CHECK(h.evars.empty());
    CHECK(h.matrix == p);
    CHECK(to_string(h) == "evars: (); matrix: P(a)");
    Formula q = formula("all x:G . P(x) -> all y in (SET[G] x) . R(x, y)", sig);
    CHECK(hr_translate(q).matrix == q);
}

TEST_CASE("existential") {
    Signature sig = logic();
    HRResult h = hr_translate(formula("ex z:G . P(z)", sig));
    REQUIRE(h.evars.size() == 1);
    CHECK(h.evars[0] == Var{"Z", star(G())});
    CHECK(to_string(h.matrix) == "ex z in Z . P(z)");
    CHECK(to_string(hr_translate(formula("ex z:N . z = 0 : N"))) == "evars: (Z:N*); matrix: ex z in Z . z = 0 : N");
}

TEST_CASE("forall-exists gives a choice function") {
    Signature sig = logic();
    HRResult h = hr_translate(formula("all z:G . ex w:G . R(z, w)", sig));
    REQUIRE(h.evars.size() == 1);
    CHECK(h.evars[0] == Var{"W", arr(G(), star(G()))});
    CHECK(to_string(h.matrix) == "all z:G . ex w in (W z) . R(z, w)");
}

TEST_CASE("implication with ex-free antecedent") {
    Signature sig = logic();
    HRResult h = hr_translate(formula("P(a) -> ex w:G . Q(w)", sig));
    REQUIRE(h.evars.size() == 1);
    CHECK(h.evars[0].type == star(G()));
    CHECK(to_string(h.matrix) == "P(a) -> (ex w in W . Q(w))");
}

TEST_CASE("implication with existential antecedent") {
    Signature sig = logic();
    HRResult h = hr_translate(formula("(ex x:G . P(x)) -> ex y:G . Q(y)", sig));
    REQUIRE(h.evars.size() == 1);
    CHECK(h.evars[0].type == arr(star(G()), star(G())));
    CHECK(h.matrix.kind() == Formula::Kind::Forall);
    CHECK(h.matrix.var().type == star(G()));
    CHECK(hr_types(formula("(ex x:G . P(x)) -> ex y:G . Q(y)", sig)) == std::vector{arr(star(G()), star(G()))});
}

TEST_CASE("conjunction and disjunction collect evars left then right") {
    HRResult h = hr_translate(formula("(ex x:N . x = 0 : N) | (ex y:N* . y = y : N*)"));
    REQUIRE(h.evars.size() == 2);
    CHECK(h.evars[0].type == star(N()));
    CHECK(h.evars[1].type == star(star(N())));
    CHECK(h.matrix.kind() == Formula::Kind::Or);
}

TEST_CASE("names avoid clashes and follow the seed") {
    // Z is a bound name of the input, so neither evar may be called Z
    HRResult h = hr_translate(formula("ex Z:N* . ex z:N . z in Z : N"));
    REQUIRE(h.evars.size() == 2);
    CHECK(h.evars[0].name == "Z#0");
    CHECK(h.evars[1].name == "Z#1");
    CHECK(h.evars[1].type == star(N()));
    HRResult s7 = hr_translate(formula("ex Z:N* . ex z:N . z in Z : N"), 7);
    CHECK(s7.evars[0].name == "Z#7");
    CHECK(to_string(h) == to_string(hr_translate(formula("ex Z:N* . ex z:N . z in Z : N"), 0)));

    Freshener f(3);
    f.reserve("X");
    CHECK(f.fresh("Y") == "Y");
    CHECK(f.fresh("Y") == "Y#3");
    CHECK(f.fresh("X") == "X#4");
    CHECK(f.is_taken("X#4"));
}

TEST_CASE("matrix instantiation") {
    Signature sig = logic();
    HRResult none = hr_translate(formula("P(a)", sig));
    CHECK(hr_matrix_instantiate(none, {}) == none.matrix);

    HRResult h = hr_translate(formula("ex z:G . P(z)", sig));
    std::vector<Term> w{term("SET[G] c", sig)};
    CHECK(to_string(hr_matrix_instantiate(h, w)) == "ex z in (SET[G] c) . P(z)");

    HRResult k = hr_translate(formula("all z:G . ex w:G . R(z, w)", sig));
    Var z{"z", G()};
    std::vector<Term> wk{bracket(z, Term::app(term("SET[G]", sig), Term::var(z)))};
    Formula inst = hr_matrix_instantiate(k, wk);
    CHECK(well_formed(inst, {}, sig).empty());
    CHECK(inst.body().bound() == Term::app(wk[0], Term::var(inst.var())));
    CHECK_THROWS(hr_matrix_instantiate(k, w));
}

TEST_CASE("monotonicity examples") {
    HRResult h = hr_translate(formula("ex z:N . z = 2 : N"));
    std::vector<Term> x{term("SET[N] 2")}, x2{term("CUP[N] (SET[N] 1) (SET[N] 2)")};
    CHECK(eval_formula(hr_matrix_instantiate(h, x)).is_true());
    CHECK(eval_formula(hr_matrix_instantiate(h, x2)).is_true());
    CHECK(monotonicity_probe(h, x, x2).is_true());
    CHECK(monotonicity_probe(h, x, x).is_true());
    std::vector<Term> none{term("SET[N] 0")};
    CHECK(eval_formula(hr_matrix_instantiate(h, none)).is_false());
    std::vector<Term> more{term("CUP[N] (SET[N] 0) (SET[N] 2)")};
    CHECK(monotonicity_probe(h, none, more).is_true());
    CHECK_THROWS(monotonicity_probe(h, none, x2));
}

TEST_CASE("HR invariants on random formulas") {
    gen::Generator g(21);
    for (int i = 0; i < 200; ++i) {
        Formula a = g.formula(4);
        INFO(to_string(a));
        HRResult h = hr_translate(a);
        CHECK(is_exists_free(h.matrix));
        for (auto& e : h.evars) CHECK(is_end_star(e.type));
        if (is_exists_free(a)) CHECK(h.matrix == a);
        CHECK(hr_types(a).size() == h.evars.size());
        CHECK(well_formed(h.matrix, Context(h.evars), arith()).empty());
    }
}
