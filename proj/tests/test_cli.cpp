#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(HMR_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string corpus(const std::string& f) { return std::string(HMR_CORPUS) + "/" + f; }

} // namespace

TEST_CASE("cli normalize") {
    auto r = run("normalize " + corpus("terms/projection.term"));
    CHECK(r.code == 0);
    CHECK(r.out == "c\n");
    auto t = run("normalize --trace " + corpus("terms/projection.term"));
    CHECK(t.out == "@ PI c\nc\n");
    auto u = run("normalize " + corpus("terms/unbound.term"));
    CHECK(u.code == 2);
    CHECK(u.out.find("unbound.term:2:5: unbound variable 'y'") != std::string::npos);
    CHECK(run("--budget 3 normalize " + corpus("terms/double_five.term")).code == 3);
    CHECK(run("normalize " + corpus("terms/double_five.term")).out == "10\n");
}

TEST_CASE("cli translate") {
    CHECK(run("translate " + corpus("formulas/exists.formula")).out ==
          "evars: (Z:N*); matrix: ex z in Z . z = 0 : N\n");
    CHECK(run("translate " + corpus("formulas/atomic.formula")).out == "evars: (); matrix: (SUC x) = 3 : N\n");
    auto bad = run("translate " + corpus("formulas/bad_bound.formula"));
    CHECK(bad.code == 2);
    CHECK(bad.out.find("star type") != std::string::npos);
    CHECK(run("translate --seed 3 " + corpus("formulas/nested.formula")).out ==
          run("translate --seed 3 " + corpus("formulas/nested.formula")).out);
}

TEST_CASE("cli check, extract and verify") {
    CHECK(run("check " + corpus("doubling.proof")).out == "ok: 24 lines\n");
    auto e = run("check " + corpus("invalid/eigenvariable.proof"));
    CHECK(e.code == 4);
    CHECK(e.out.find("line 3: ALL_INTRO: eigenvariable 'x'") != std::string::npos);

    std::string report = std::string(HMR_SCRATCH) + "/exists_two.json";
    auto x = run("extract " + corpus("exists_two.proof") + " --out " + report);
    CHECK(x.code == 0);
    CHECK(x.out.find("witnesses: {2}") != std::string::npos);
    auto v = run("verify " + report);
    CHECK(v.code == 0);
    CHECK(v.out == "line 3: True\n");

    std::string u = std::string(HMR_SCRATCH) + "/unbounded.json";
    CHECK(run("extract " + corpus("invalid/unbounded_goal.proof") + " --out " + u).code == 0);
    auto uv = run("verify " + u + " --bind x=4");
    CHECK(uv.code == 5);
    CHECK(uv.out.find("Undecidable") != std::string::npos);
    CHECK(run("verify " + u).code == 1); // x unbound
}

TEST_CASE("cli fuzz and usage") {
    auto f = run("fuzz --seed 3 --cases 20");
    CHECK(f.code == 0);
    CHECK(f.out.find("ok   monotonicity") != std::string::npos);
    CHECK(run("fuzz --property nope --cases 1").code == 1);
    CHECK(run("").code != 0);
    CHECK(run("check /nonexistent.proof").code == 1);
}
