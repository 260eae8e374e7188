#include "hmr/report.hpp"

#include <json.hpp>

#include "hmr/error.hpp"
#include "hmr/syntax.hpp"

namespace hmr {

using nlohmann::json;

const Term* Bindings::find(const std::string& name) const {
    for (auto& [n, t] : values)
        if (n == name) return &t;
    return nullptr;
}

namespace {

Term closed_term(Parser& p) {
    const Token& at = p.peek();
    Term t = p.term();
    if (!t.is_closed()) p.fail_at(at, "binding values must be closed terms");
    return t;
}

void set_value(Bindings& b, const std::string& name, Term t) {
    for (auto& [n, v] : b.values)
        if (n == name) {
            v = std::move(t);
            return;
        }
    b.values.emplace_back(name, std::move(t));
}

} // namespace

void parse_bindings(std::string_view text, const Signature& sig, Bindings& into) {
    Parser p(text, sig);
    while (!p.at_end()) {
        const Token& at = p.peek();
        std::string name = p.ident();
        if (name == "table") {
            const Token& rt = p.peek();
            std::string rel = p.ident();
            const RelSymbol* r = sig.find_relation(rel);
            if (!r) p.fail_at(rt, "unknown relation symbol '" + rel + "'");
            p.expect("=");
            p.expect("{");
            into.model.declare(rel);
            if (!p.at("}")) {
                do {
                    const Token& row_at = p.peek();
                    p.expect("(");
                    std::vector<Term> row;
                    if (!p.at(")")) {
                        do row.push_back(closed_term(p));
                        while (p.accept(","));
                    }
                    p.expect(")");
                    if (row.size() != static_cast<std::size_t>(r->arity))
                        p.fail_at(row_at, "row has " + std::to_string(row.size()) + " entries, '" + rel +
                                              "' has arity " + std::to_string(r->arity));
                    into.model.add_row(rel, row);
                } while (p.accept(","));
            }
            p.expect("}");
            p.accept(";");
            continue;
        }
        if (!p.accept(":=")) p.fail_at(at, "expected 'name := term' or 'table R = {...}'");
        set_value(into, name, closed_term(p));
        p.accept(";");
    }
}

void parse_binding_arg(std::string_view arg, const Signature& sig, Bindings& into) {
    auto eq = arg.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError(1, 1, "binding must look like name=term");
    std::string name(arg.substr(0, eq));
    set_value(into, name, parse_term(arg.substr(eq + 1), sig));
}

std::vector<Term> context_values(const Context& ctx, const Bindings& b) {
    std::vector<Term> out;
    for (auto& v : ctx.vars()) {
        const Term* t = b.find(v.name);
        if (!t) throw Error("no value bound for context variable '" + v.name + "'");
        if (t->type() != v.type)
            throw Error("value for '" + v.name + "' has type " + to_string(t->type()) + ", expected " +
                        to_string(v.type));
        out.push_back(*t);
    }
    return out;
}

namespace {

bool fully_bound(const Context& ctx, const Bindings& b) {
    for (auto& v : ctx.vars())
        if (!b.find(v.name)) return false;
    return true;
}

json line_json(const ProofLine& l, const LineRealizers& lr, const Context& ctx, const Bindings& b) {
    json evars = json::array();
    for (auto& e : lr.hr.evars) evars.push_back({{"name", e.name}, {"type", to_string(e.type)}});
    std::optional<std::vector<Term>> values;
    if (fully_bound(ctx, b)) values = context_values(ctx, b);
    json reals = json::array();
    for (std::size_t i = 0; i < lr.terms.size(); ++i) {
        json r{{"evar", lr.hr.evars[i].name}, {"type", to_string(lr.terms[i].type())},
               {"term", to_string(lr.terms[i])}};
        if (values && lr.hr.evars[i].type.is_star()) {
            json ws = json::array();
            for (auto& w : enumerate_set(Term::apps(lr.terms[i], *values), default_budget()))
                ws.push_back(to_string(w));
            r["witnesses"] = ws;
        }
        reals.push_back(r);
    }
    return {{"number", l.number},
            {"formula", to_string(l.formula)},
            {"justification", to_string(l.just)},
            {"provenance", lr.provenance},
            {"evars", evars},
            {"matrix", to_string(lr.hr.matrix)},
            {"realizers", reals}};
}

} // namespace

std::string report_json(const ProofScript& p, const RealizerBundle& bundle, const Bindings& b) {
    json ctx = json::array();
    for (auto& v : p.ctx.vars()) ctx.push_back({{"name", v.name}, {"type", to_string(v.type)}});
    json assumptions = json::array();
    for (auto& a : p.assumptions) assumptions.push_back({{"name", a.name}, {"formula", to_string(a.formula)}});
    json lines = json::array();
    for (std::size_t i = 0; i < p.lines.size(); ++i) lines.push_back(line_json(p.lines[i], bundle.lines[i], p.ctx, b));
    json out{{"signature", signature_text(p.sig)},
             {"context", ctx},
             {"assumptions", assumptions},
             {"lines", lines},
             {"goal", p.lines.back().number}};
    return out.dump(2) + "\n";
}

std::string report_text(const ProofScript& p, const RealizerBundle& bundle, const Bindings& b) {
    std::string out;
    std::optional<std::vector<Term>> values;
    if (fully_bound(p.ctx, b)) values = context_values(p.ctx, b);
    for (std::size_t i = 0; i < p.lines.size(); ++i) {
        const auto& l = p.lines[i];
        const auto& lr = bundle.lines[i];
        out += std::to_string(l.number) + ") " + to_string(l.formula) + "   [" + lr.provenance + "]\n";
        if (lr.terms.empty()) continue;
        out += "   " + to_string(lr.hr) + "\n";
        for (std::size_t k = 0; k < lr.terms.size(); ++k) {
            out += "   " + lr.hr.evars[k].name + " := " + to_string(lr.terms[k]) + "\n";
            if (values && lr.hr.evars[k].type.is_star()) {
                out += "      witnesses: {";
                bool first = true;
                for (auto& w : enumerate_set(Term::apps(lr.terms[k], *values), default_budget())) {
                    out += (first ? "" : ", ") + to_string(w);
                    first = false;
                }
                out += "}\n";
            }
        }
    }
    return out;
}

LoadedReport load_report(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(1, 1, std::string("report is not valid JSON: ") + e.what());
    }
    try {
        LoadedReport out;
        out.sig = parse_signature(j.at("signature").get<std::string>());
        for (auto& v : j.at("context"))
            out.ctx.add(Var{v.at("name").get<std::string>(), parse_type(v.at("type").get<std::string>(), out.sig)});
        out.goal_line = j.at("goal").get<int>();
        for (auto& l : j.at("lines")) out.lines.emplace_back(l.at("number").get<int>(), l.at("formula").get<std::string>());
        const json* goal = nullptr;
        for (auto& l : j.at("lines"))
            if (l.at("number").get<int>() == out.goal_line) goal = &l;
        if (!goal) throw ParseError(1, 1, "report has no goal line");
        out.goal = parse_formula(goal->at("formula").get<std::string>(), out.sig, out.ctx);
        for (auto& r : goal->at("realizers")) out.realizers.push_back(parse_term(r.at("term").get<std::string>(), out.sig));
        return out;
    } catch (const json::exception& e) {
        throw ParseError(1, 1, std::string("malformed report: ") + e.what());
    }
}

} // namespace hmr
