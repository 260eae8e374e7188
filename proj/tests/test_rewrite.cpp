#include <doctest.h>

#include <cstdlib>

#include "helpers.hpp"
#include "hmr/error.hpp"
#include "hmr/gen.hpp"
#include "hmr/rewrite.hpp"
#include "oracle.hpp"

using namespace hmr;
using namespace th;

namespace {

Term nf(const std::string& s, const Signature& sig = arith()) { return normalize(term(s, sig)); }

std::vector<std::uint64_t> nums(const WitnessSet& w) {
    std::vector<std::uint64_t> out;
    for (auto& t : w) out.push_back(numeral_value(t).value());
    return out;
}

} // namespace

TEST_CASE("one-step contractions") {
    Signature sig = logic();
    Rule r;
    CHECK(contract(term("PI[G,G] c d", sig), &r) == term("c", sig));
    CHECK(r == Rule::Pi);
    CHECK(contract(term("BIGCUP[G,G] (SET[G] c) (SET[G])", sig), &r) == term("SET[G] c", sig));
    CHECK(r == Rule::BigCupSing);
    Term rec = term("REC[N] (SUC 0) 4 PI[N,N]");
    CHECK(contract(rec, &r) == term("PI[N,N] (REC[N] 0 4 PI[N,N]) 0"));
    CHECK(r == Rule::RecSuc);
    CHECK(contract(term("REC[N] 0 4 PI[N,N]"), &r) == numeral(4));
    CHECK(contract(term("SIG[N,N,N] PI[N,N] SUC 4"), &r) == term("PI[N,N] 4 (SUC 4)"));
    CHECK(contract(term("BIGCUP[N,N] (CUP[N] (SET[N] 1) (SET[N] 2)) SET[N]"), &r) ==
          term("CUP[N] (BIGCUP[N,N] (SET[N] 1) SET[N]) (BIGCUP[N,N] (SET[N] 2) SET[N])"));
}

TEST_CASE("normal forms") {
    Signature sig = logic();
    CHECK(nf("BIGCUP[G,G] (CUP[G] (SET[G] a) (SET[G] b)) (\\x:G. SET[G] x)", sig) ==
          term("CUP[G] (SET[G] a) (SET[G] b)", sig));
    CHECK(nf("SIG[G,G->G,G] PI[G,G->G] PI[G,G] c", sig) == term("c", sig));
    // two recursor conversions, with add1 = [x][n] SUC x
    CHECK(nf("REC[N] 2 0 (\\x:N. \\n:N. SUC x)") == numeral(2));
    CHECK(nf("REC[N] 3 0 (\\x:N. \\n:N. SUC (SUC x))") == numeral(6));
    CHECK(nf("SET[N] (PI[N,N] 1 2)") == term("SET[N] 1"));
}

TEST_CASE("leftmost-outermost order") {
    Term t = term("PI[N,N] (PI[N,N] 1 2) (PI[N,N] 3 4)");
    auto s = step(t);
    REQUIRE(s);
    CHECK(s->position == "@");
    CHECK(s->result == term("PI[N,N] 1 2"));
    Term u = term("SUC (PI[N,N] 1 2)");
    CHECK(step(u)->position == "@a");
    CHECK_FALSE(step(numeral(3)));
}

TEST_CASE("trace and budget") {
    Term t = term("REC[N] 3 0 (\\x:N. \\n:N. SUC (SUC x))");
    ReductionTrace tr;
    normalize(t, kDefaultBudget, &tr);
    CHECK(tr.steps.size() == tr.budget_used);
    CHECK(tr.steps.front().rule == Rule::RecSuc);
    std::string dump = tr.dump();
    CHECK(std::count(dump.begin(), dump.end(), '\n') == static_cast<long>(tr.steps.size()));
    CHECK(dump.rfind("@ REC-SUC ", 0) == 0);

    try {
        normalize(t, 2);
        FAIL("expected BudgetExhausted");
    } catch (const BudgetExhausted& e) {
        CHECK_FALSE(e.trace_tail().empty());
    }
    CHECK_NOTHROW(normalize(t, tr.budget_used));
    CHECK_THROWS_AS(normalize(t, tr.budget_used - 1), BudgetExhausted);
}

TEST_CASE("budget from the environment") {
    setenv("HMR_BUDGET", "1234", 1);
    CHECK(default_budget() == 1234);
    setenv("HMR_BUDGET", "lots", 1);
    CHECK(default_budget() == kDefaultBudget);
    unsetenv("HMR_BUDGET");
    CHECK(default_budget() == kDefaultBudget);
}

TEST_CASE("surface elements and set shape") {
    Signature sig = logic();
    CHECK(surface_elements(term("SET[G] c", sig)).elements() == std::vector{term("c", sig)});
    CHECK(surface_elements(term("CUP[G] (SET[G] a) (SET[G] b)", sig)).size() == 2);
    Term big = term("BIGCUP[G,G] (SET[G] a) SET[G]", sig);
    CHECK(surface_elements(big).empty());
    CHECK(is_set_like(term("CUP[G] (SET[G] a) (SET[G] b)", sig)));
    CHECK_FALSE(is_set_like(big));
    CHECK(is_set_like(term("SET[G] (PI[G,G] c d)", sig)));
    CHECK_THROWS_AS(surface_elements(term("c", sig)), TypeError);
}

TEST_CASE("enumeration") {
    CHECK(nums(enumerate_set(term("SET[N] 0"))) == std::vector<std::uint64_t>{0});
    CHECK(nums(enumerate_set(term("BIGCUP[N,N] (CUP[N] (SET[N] 0) (SET[N] 1)) (\\x:N. SET[N] (SUC x))"))) ==
          std::vector<std::uint64_t>{1, 2});
    CHECK(nums(enumerate_set(term("CUP[N] (SET[N] 0) (SET[N] 0)"))) == std::vector<std::uint64_t>{0});
    CHECK(as_numeral(term("SUC (SUC 0)")) == 2u);
    CHECK(as_numeral(term("REC[N] 0 1 PI[N,N]")) == 1u);
    CHECK(as_numeral(term("REC[N] 0 1 (\\x:N. \\n:N. REC[N] n x PI[N,N])")) == 1u);
    CHECK(as_numeral(term("PI[N,N] 0 1")) == 0u);
}

TEST_CASE("witness set") {
    WitnessSet w;
    CHECK(w.insert(numeral(1)));
    CHECK_FALSE(w.insert(term("SUC 0")));
    CHECK(w.insert(numeral(2)));
    CHECK(w.contains(numeral(2)));
    CHECK(w.size() == 2);
}

// The denotational oracle does not look at the rewrite rules; agreement on
// random closed terms checks the rules against the intended semantics.
TEST_CASE("normal forms agree with the denotational oracle") {
    gen::Generator g(77);
    for (int i = 0; i < 300; ++i) {
        Term t = g.closed_term(40, 3);
        Term n = normalize(t);
        INFO(to_string(t));
        CHECK(n.is_normal());
        CHECK(oracle::same(oracle::denote(t), oracle::denote(n), t.type()));
        CHECK(normalize(n) == n);
        if (t.type() == N()) CHECK(oracle::denote(t)->n == numeral_value(n).value());
        if (t.type() == star(N()))
            CHECK(oracle::numerals(oracle::denote(t)) == [&] {
                auto v = nums(enumerate_set(t));
                std::sort(v.begin(), v.end());
                return v;
            }());
    }
}

TEST_CASE("innermost and outermost agree on small terms") {
    gen::Generator g(5);
    for (int i = 0; i < 200; ++i) {
        Term t = g.closed_term(30, 3);
        CHECK(normalize(t) == normalize_innermost(t));
    }
}
