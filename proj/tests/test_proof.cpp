#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "hmr/error.hpp"
#include "hmr/proof.hpp"

using namespace hmr;
using namespace th;

namespace {

CheckResult check(const std::string& text) { return check_proof(parse_proof(text)); }

bool has_error(const CheckResult& r, int line, const std::string& needle) {
    for (auto& d : r.errors)
        if (d.line == line && d.message.find(needle) != std::string::npos) return true;
    return false;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("axiom lines") {
    CHECK(check("1) bot -> 0 = 0 : N BY axiom EFQ {A := 0 = 0 : N}").ok());
    CHECK(check("1) 3 = 3 : N BY axiom EQ_REFL {t := 3}").ok());
    CHECK(has_error(check("1) 3 = 4 : N BY axiom EQ_REFL {t := 3}"), 1, "axiom EQ_REFL"));
    CHECK(check("1) (PI[N,N] 2 5) = 2 : N BY axiom CONV {t := PI[N,N] 2 5; u := 2}").ok());
    CHECK(has_error(check("1) 2 = 5 : N BY axiom CONV {t := 2; u := 5}"), 1, "different normal forms"));
    CHECK(has_error(check("1) bot -> bot BY axiom EFQ {}"), 1, "missing parameter 'A'"));
}

TEST_CASE("eigenvariable conditions") {
    const char* bad = R"(context x:N;
1) x = x : N & x = x : N -> x = x : N BY axiom PROJ {A := x = x : N; B := x = x : N}
2) x = x : N -> x = x : N -> x = x : N BY rule EXPORT from 1
3) x = x : N -> all x:N . (x = x : N -> x = x : N) BY rule ALL_INTRO from 2
)";
    CHECK(has_error(check(bad), 3, "eigenvariable 'x'"));

    const char* ex_bad = R"(context x:N;
1) x = 0 : N -> x = 0 : N & x = 0 : N BY axiom DUP {A := x = 0 : N}
2) (ex x:N . x = 0 : N) -> x = 0 : N & x = 0 : N BY rule EX_ELIM from 1
)";
    CHECK(has_error(check(ex_bad), 2, "eigenvariable 'x'"));
}

TEST_CASE("IP needs an ex-free premise") {
    const char* ip = R"(1) ((ex y:N . y = y : N) -> ex w:N . w = w : N) -> ex Z:N* . ((ex y:N . y = y : N) -> ex w in Z . w = w : N)
   BY axiom IP {w := w:N; z := Z:N*; A := ex y:N . y = y : N; B := w = w : N}
)";
    CHECK(has_error(check(ip), 1, "not ex-free"));
    const char* ok = R"(1) (0 = 0 : N -> ex w:N . w = 0 : N) -> ex Z:N* . (0 = 0 : N -> ex w in Z . w = 0 : N)
   BY axiom IP {w := w:N; z := Z:N*; A := 0 = 0 : N; B := w = 0 : N}
)";
    CHECK(check(ok).ok());
}

TEST_CASE("rule premises") {
    CHECK(has_error(check("1) 0 = 0 : N BY axiom EQ_REFL {t := 0}\n2) 0 = 0 : N BY rule MP from 1, 1"), 2,
                    "not an implication"));
    CHECK(has_error(check("1) 0 = 0 : N BY rule MP from 1, 2"), 1, "not an earlier line"));
    CHECK(has_error(check("1) 0 = 0 : N BY axiom EQ_REFL {t := 0}\n2) 0 = 0 : N BY rule MP from 1"), 2, "takes 2"));
    CHECK(has_error(check("2) 0 = 0 : N BY axiom EQ_REFL {t := 0}\n1) 0 = 0 : N BY axiom EQ_REFL {t := 0}"), 1,
                    "must increase"));
    CHECK(has_error(check("1) 0 = 0 : N BY assumption h"), 1, "unknown assumption"));
    CHECK_THROWS_AS(parse_proof("1) 0 = 0 : N BY axiom NOPE {}"), ParseError);
    CHECK_THROWS_AS(parse_proof("1) 0 = 0 : N BY rule NOPE from 1"), ParseError);
    CHECK_THROWS_AS(parse_proof("1) 0 = 0 : N BY axiom EQ_REFL {t := 0; t := 0}"), ParseError);
    CHECK(check("").errors.size() == 1);
}

TEST_CASE("assumptions must be ex-free") {
    auto r = check("assume h : ex x:N . x = 0 : N;\n1) ex x:N . x = 0 : N BY assumption h");
    CHECK(has_error(r, 0, "not ex-free"));
    CHECK(check("assume h : 0 = 0 : N;\n1) 0 = 0 : N BY assumption h").ok());
}

TEST_CASE("arithmetic axioms need arithmetic mode") {
    auto r = check_proof(parse_proof("mode logic; const a : G;\n1) a = a : G -> bot BY axiom SUC_NZ {t := a}"));
    CHECK(has_error(r, 1, "needs arithmetic mode"));
}

TEST_CASE("EQ_SUBST replaces chosen occurrences") {
    const char* some = R"(context x:N;
1) x = 2 : N & (PI[N,N] x x) = x : N -> (PI[N,N] 2 x) = x : N BY axiom EQ_SUBST {x := x; y := 2; A := (PI[N,N] x x) = x : N}
2) x = 2 : N & (PI[N,N] x x) = x : N -> (PI[N,N] 2 x) = 2 : N BY axiom EQ_SUBST {x := x; y := 2; A := (PI[N,N] x x) = x : N}
3) x = 2 : N & (PI[N,N] x x) = x : N -> (PI[N,N] 2 x) = 3 : N BY axiom EQ_SUBST {x := x; y := 2; A := (PI[N,N] x x) = x : N}
)";
    auto r = check(some);
    CHECK_FALSE(has_error(r, 1, ""));
    CHECK_FALSE(has_error(r, 2, ""));
    CHECK(has_error(r, 3, "is not obtained"));
}

TEST_CASE("axiom instances") {
    Params ps;
    ps.entries.emplace_back("t", ParamValue{numeral(2)});
    CHECK(to_string(axiom_instance("EQ_REFL", ps, arith())) == "2 = 2 : N");
    CHECK_THROWS_AS(axiom_instance("SUC_NZ", ps, logic()), Error);
    CHECK(axiom_catalogue().size() == 32);
    CHECK(find_axiom("IND")->arithmetic);
    CHECK(std::string(rule_keyword(*find_rule("EX_ELIM"))) == "EX_ELIM");
}

TEST_CASE("corpus proofs print and parse back") {
    int n = 0;
    for (auto& e : std::filesystem::recursive_directory_iterator(HMR_CORPUS)) {
        if (e.path().extension() != ".proof") continue;
        std::string text = slurp(e.path());
        ProofScript p;
        try {
            p = parse_proof(text);
        } catch (const ParseError&) {
            continue; // deliberately malformed files
        }
        ++n;
        INFO(e.path().string());
        std::string printed = to_string(p);
        ProofScript q = parse_proof(printed);
        CHECK(to_string(q) == printed);
        REQUIRE(q.lines.size() == p.lines.size());
        for (std::size_t i = 0; i < p.lines.size(); ++i) {
            CHECK(q.lines[i].formula == p.lines[i].formula);
            CHECK(to_string(q.lines[i].just) == to_string(p.lines[i].just));
        }
        CHECK(check_proof(q).ok() == check_proof(p).ok());
    }
    CHECK(n >= 9);
}
