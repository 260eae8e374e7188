// hmr: batch front end. Exit codes:
//   0 ok, 1 false verdict or other error, 2 parse error, 3 budget exhausted,
//   4 proof check failure, 5 undecidable verdict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hmr/error.hpp"
#include "hmr/extract.hpp"
#include "hmr/fuzz.hpp"
#include "hmr/hr.hpp"
#include "hmr/proof.hpp"
#include "hmr/report.hpp"
#include "hmr/rewrite.hpp"
#include "hmr/syntax.hpp"
#include "hmr/verify.hpp"

using namespace hmr;

namespace {

enum Exit { kOk = 0, kFalse = 1, kParse = 2, kBudget = 3, kCheck = 4, kUndecidable = 5 };

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string sig_file;
    std::size_t budget = 0;
    Signature base() const {
        return sig_file.empty() ? Signature::arithmetic() : parse_signature(slurp(sig_file));
    }
    std::size_t steps() const { return budget ? budget : default_budget(); }
};

int cmd_check(const Options& o, const std::string& file) {
    ProofScript p = parse_proof(slurp(file), o.base());
    CheckResult r = check_proof(p);
    for (auto& d : r.errors) std::cerr << file << ": line " << d.line << ": " << d.message << "\n";
    if (!r.ok()) return kCheck;
    std::cout << "ok: " << p.lines.size() << " lines\n";
    return kOk;
}

int cmd_normalize(const Options& o, const std::string& file, bool trace) {
    Parser ps(slurp(file), o.base());
    ps.parse_header();
    Term t = ps.term();
    if (!ps.at_end()) ps.fail("unexpected trailing input");
    ReductionTrace tr;
    Term n = normalize(t, o.steps(), &tr);
    if (trace) std::cout << tr.dump();
    std::cout << to_string(n) << "\n";
    return kOk;
}

int cmd_translate(const Options& o, const std::string& file, std::uint64_t seed) {
    Parser ps(slurp(file), o.base());
    ps.parse_header();
    Formula a = ps.formula();
    if (!ps.at_end()) ps.fail("unexpected trailing input");
    auto diags = well_formed(a, ps.context(), ps.signature());
    if (!diags.empty()) {
        for (auto& d : diags) std::cerr << file << ": " << d << "\n";
        return kParse;
    }
    std::cout << to_string(hr_translate(a, seed)) << "\n";
    return kOk;
}

void load_bindings(const std::string& file, const std::vector<std::string>& args, const Signature& sig,
                   Bindings& b) {
    if (!file.empty()) parse_bindings(slurp(file), sig, b);
    for (auto& a : args) parse_binding_arg(a, sig, b);
}

int cmd_extract(const Options& o, const std::string& file, const std::string& out, const std::string& bind_file,
                const std::vector<std::string>& binds) {
    ProofScript p = parse_proof(slurp(file), o.base());
    CheckResult r = check_proof(p);
    for (auto& d : r.errors) std::cerr << file << ": line " << d.line << ": " << d.message << "\n";
    if (!r.ok()) return kCheck;
    RealizerBundle bundle = extract(p);
    Bindings b;
    load_bindings(bind_file, binds, p.sig, b);
    std::cout << report_text(p, bundle, b);
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) throw Error("cannot write " + out);
        os << report_json(p, bundle, b) << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o, const std::string& file, const std::string& bind_file,
               const std::vector<std::string>& binds) {
    LoadedReport rep = load_report(slurp(file));
    Bindings b;
    load_bindings(bind_file, binds, rep.sig, b);
    std::vector<Term> values = context_values(rep.ctx, b);
    EvalVerdict v = check_realizer(rep.goal, rep.ctx, values, rep.realizers, b.model, o.steps());
    std::cout << "line " << rep.goal_line << ": " << truth_name(v.value);
    if (!v.reason.empty() && !v.is_true()) std::cout << " (" << v.reason << ")";
    std::cout << "\n";
    if (v.is_true()) return kOk;
    return v.is_false() ? kFalse : kUndecidable;
}

int cmd_fuzz(std::uint64_t seed, std::size_t cases, const std::string& only) {
    FuzzOptions fo;
    fo.seed = seed;
    fo.cases = cases;
    bool all_ok = true;
    bool any = false;
    for (auto& r : fuzz_all(fo)) {
        if (!only.empty() && r.name != only) continue;
        any = true;
        all_ok = all_ok && r.ok();
        std::cout << summary_line(r) << "\n";
    }
    if (!any) throw Error("no property named " + only);
    return all_ok ? kOk : kFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hmr: terms, formulas and proofs for Herbrandized modified realizability"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--sig", o.sig_file, "signature file (declarations only)");
    app.add_option("--budget", o.budget, "reduction step budget (default: HMR_BUDGET or 1000000)");

    std::string file, out, bind_file, only;
    std::vector<std::string> binds;
    bool trace = false;
    std::uint64_t seed = 0;
    std::size_t cases = 500;

    auto* check = app.add_subcommand("check", "check a proof script");
    check->add_option("file", file)->required();

    auto* norm = app.add_subcommand("normalize", "print the normal form of a term");
    norm->add_option("file", file)->required();
    norm->add_flag("--trace", trace, "print one line per step: pos rule term");
    norm->add_option("--budget", o.budget);

    auto* tr = app.add_subcommand("translate", "print the HR translation of a formula");
    tr->add_option("file", file)->required();
    tr->add_option("--seed", seed, "starting counter for fresh evar names");

    auto* ex = app.add_subcommand("extract", "check a proof and extract realizers");
    ex->add_option("file", file)->required();
    ex->add_option("--out", out, "write the JSON report here");
    ex->add_option("--bindings", bind_file, "context values and relation tables");
    ex->add_option("--bind", binds, "name=term");

    auto* ver = app.add_subcommand("verify", "evaluate the goal of an extraction report");
    ver->add_option("report", file)->required();
    ver->add_option("--bindings", bind_file);
    ver->add_option("--bind", binds, "name=term");
    ver->add_option("--budget", o.budget);

    auto* fz = app.add_subcommand("fuzz", "run the property tests");
    fz->add_option("--seed", seed);
    fz->add_option("--cases", cases);
    fz->add_option("--property", only, "run only this property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kFalse;
    }

    try {
        if (*check) return cmd_check(o, file);
        if (*norm) return cmd_normalize(o, file, trace);
        if (*tr) return cmd_translate(o, file, seed);
        if (*ex) return cmd_extract(o, file, out, bind_file, binds);
        if (*ver) return cmd_verify(o, file, bind_file, binds);
        if (*fz) return cmd_fuzz(seed ? seed : 1, cases, only);
    } catch (const ParseError& e) {
        std::cerr << file << ":" << e.what() << "\n";
        return kParse;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n" << e.trace_tail();
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFalse;
    }
    return kFalse;
}
