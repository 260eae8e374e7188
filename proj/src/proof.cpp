#include "hmr/proof.hpp"

#include <algorithm>
#include <set>

#include "hmr/error.hpp"
#include "hmr/rewrite.hpp"
#include "hmr/syntax.hpp"

namespace hmr {

// ---------------------------------------------------------------- catalogue

const std::vector<AxiomSchema>& axiom_catalogue() {
    using P = ParamKind;
    static const std::vector<AxiomSchema> cat{
        {"DUP", {{"A", P::Formula}}, false, "A -> A & A"},
        {"CONTR", {{"A", P::Formula}}, false, "A | A -> A"},
        {"INL", {{"A", P::Formula}, {"B", P::Formula}}, false, "A -> A | B"},
        {"PROJ", {{"A", P::Formula}, {"B", P::Formula}}, false, "A & B -> A"},
        {"AND_COMM", {{"A", P::Formula}, {"B", P::Formula}}, false, "A & B -> B & A"},
        {"OR_COMM", {{"A", P::Formula}, {"B", P::Formula}}, false, "A | B -> B | A"},
        {"EFQ", {{"A", P::Formula}}, false, "bot -> A"},
        {"ALL_ELIM", {{"z", P::Var}, {"A", P::Formula}, {"t", P::Term}}, false, "(all z . A) -> A[t/z]"},
        {"EX_INTRO", {{"z", P::Var}, {"A", P::Formula}, {"t", P::Term}}, false, "A[t/z] -> ex z . A"},
        {"EQ_REFL", {{"t", P::Term}}, false, "t = t"},
        {"EQ_SUBST", {{"x", P::Term}, {"y", P::Term}, {"A", P::Formula}}, false,
         "x = y & A -> A' (A atomic, A' replaces some x by y)"},
        {"CONV", {{"t", P::Term}, {"u", P::Term}}, false, "t = u (same normal form)"},
        {"BALL_UNFOLD", {{"z", P::Var}, {"t", P::Term}, {"A", P::Formula}}, false,
         "(all z in t . A) -> all z . (z in t -> A)"},
        {"BALL_FOLD", {{"z", P::Var}, {"t", P::Term}, {"A", P::Formula}}, false,
         "(all z . (z in t -> A)) -> all z in t . A"},
        {"BEX_UNFOLD", {{"z", P::Var}, {"t", P::Term}, {"A", P::Formula}}, false,
         "(ex z in t . A) -> ex z . (z in t & A)"},
        {"BEX_FOLD", {{"z", P::Var}, {"t", P::Term}, {"A", P::Formula}}, false,
         "(ex z . (z in t & A)) -> ex z in t . A"},
        {"SIGMA", {{"t", P::Term}, {"q", P::Term}, {"r", P::Term}}, false, "SIG t q r = t r (q r)"},
        {"PI", {{"t", P::Term}, {"q", P::Term}}, false, "PI t q = t"},
        {"SING_MEM", {{"w", P::Term}, {"x", P::Term}}, false, "w in SET x -> w = x"},
        {"SING_MEM_REV", {{"w", P::Term}, {"x", P::Term}}, false, "w = x -> w in SET x"},
        {"CUP_MEM", {{"w", P::Term}, {"x", P::Term}, {"y", P::Term}}, false, "w in CUP x y -> w in x | w in y"},
        {"CUP_MEM_REV", {{"w", P::Term}, {"x", P::Term}, {"y", P::Term}}, false,
         "w in x | w in y -> w in CUP x y"},
        {"BIGCUP_MEM", {{"z", P::Term}, {"x", P::Term}, {"w", P::Term}, {"y", P::Term}}, false,
         "z in x & w in y z -> w in BIGCUP x y"},
        {"BIGCUP_SING", {{"x", P::Term}, {"y", P::Term}}, false, "BIGCUP (SET x) y = y x"},
        {"BIGCUP_CUP", {{"x", P::Term}, {"y", P::Term}, {"z", P::Term}}, false,
         "BIGCUP (CUP x y) z = CUP (BIGCUP x z) (BIGCUP y z)"},
        {"AC", {{"z", P::Var}, {"w", P::Var}, {"W", P::Var}, {"A", P::Formula}}, false,
         "(all z . ex w . A) -> ex W . all z . ex w in W z . A"},
        {"IP", {{"w", P::Var}, {"z", P::Var}, {"A", P::Formula}, {"B", P::Formula}}, false,
         "(A -> ex w . B) -> ex z . (A -> ex w in z . B), A ex-free"},
        {"SUC_NZ", {{"t", P::Term}}, true, "SUC t = 0 -> bot"},
        {"SUC_INJ", {{"t", P::Term}, {"u", P::Term}}, true, "SUC t = SUC u -> t = u"},
        {"REC_ZERO", {{"q", P::Term}, {"r", P::Term}}, true, "REC 0 q r = q"},
        {"REC_SUC", {{"t", P::Term}, {"q", P::Term}, {"r", P::Term}}, true, "REC (SUC t) q r = r (REC t q r) t"},
        {"IND", {{"n", P::Var}, {"A", P::Formula}}, true, "A[0/n] & (all n . (A -> A[SUC n/n])) -> all n . A"},
    };
    return cat;
}

const AxiomSchema* find_axiom(std::string_view name) {
    for (auto& a : axiom_catalogue())
        if (a.name == name) return &a;
    return nullptr;
}

namespace {

constexpr std::array<std::pair<RuleKind, const char*>, 7> kRules{{
    {RuleKind::MP, "MP"},
    {RuleKind::SYL, "SYL"},
    {RuleKind::OR_MONO, "OR_MONO"},
    {RuleKind::EXPORT, "EXPORT"},
    {RuleKind::IMPORT, "IMPORT"},
    {RuleKind::ALL_INTRO, "ALL_INTRO"},
    {RuleKind::EX_ELIM, "EX_ELIM"},
}};

} // namespace

const char* rule_keyword(RuleKind r) {
    for (auto& [k, n] : kRules)
        if (k == r) return n;
    return "?";
}

std::optional<RuleKind> find_rule(std::string_view name) {
    for (auto& [k, n] : kRules)
        if (name == n) return k;
    return std::nullopt;
}

std::size_t rule_arity(RuleKind r) { return r == RuleKind::MP || r == RuleKind::SYL ? 2 : 1; }

// ---------------------------------------------------------------- params

const ParamValue* Params::find(const std::string& key) const {
    for (auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

namespace {

template <class T>
const T& get_param(const Params& p, const std::string& key, const char* kind) {
    const ParamValue* v = p.find(key);
    if (!v) throw Error("missing parameter '" + key + "'");
    if (!std::holds_alternative<T>(*v)) throw Error("parameter '" + key + "' must be a " + kind);
    return std::get<T>(*v);
}

} // namespace

const Formula& Params::formula(const std::string& key) const { return get_param<Formula>(*this, key, "formula"); }
const Term& Params::term(const std::string& key) const { return get_param<Term>(*this, key, "term"); }
const Var& Params::var(const std::string& key) const { return get_param<Var>(*this, key, "variable"); }

const ProofLine* ProofScript::line(int number) const {
    for (auto& l : lines)
        if (l.number == number) return &l;
    return nullptr;
}

const Assumption* ProofScript::assumption(const std::string& name) const {
    for (auto& a : assumptions)
        if (a.name == name) return &a;
    return nullptr;
}

// ---------------------------------------------------------------- parsing

ProofScript parse_proof(std::string_view text, Signature base) {
    Parser p(text, std::move(base));
    p.parse_header();
    ProofScript out{p.signature(), p.context(), {}, {}};
    while (!p.at_end()) {
        if (p.at("assume")) {
            p.ident();
            const Token& nt = p.peek();
            std::string name = p.ident();
            if (out.assumption(name)) p.fail_at(nt, "duplicate assumption '" + name + "'");
            p.expect(":");
            Formula f = p.formula();
            p.expect(";");
            out.assumptions.push_back({name, f});
            continue;
        }
        ProofLine line;
        const Token& start = p.peek();
        line.source_line = start.line;
        line.number = static_cast<int>(p.number());
        if (out.line(line.number)) p.fail_at(start, "duplicate line number " + std::to_string(line.number));
        p.expect(")");
        line.formula = p.formula();
        p.expect("BY");
        const Token& kt = p.peek();
        std::string kind = p.ident();
        Justification& j = line.just;
        if (kind == "axiom") {
            j.kind = Justification::Kind::Axiom;
            const Token& at = p.peek();
            j.name = p.ident();
            const AxiomSchema* schema = find_axiom(j.name);
            if (!schema) p.fail_at(at, "unknown axiom '" + j.name + "'");
            std::size_t scoped = 0;
            if (p.accept("{")) {
                while (!p.accept("}")) {
                    const Token& keytok = p.peek();
                    std::string key = p.ident();
                    auto it = std::find_if(schema->params.begin(), schema->params.end(),
                                           [&](auto& e) { return e.first == key; });
                    if (it == schema->params.end())
                        p.fail_at(keytok, "axiom " + j.name + " has no parameter '" + key + "'");
                    if (j.params.find(key)) p.fail_at(keytok, "parameter '" + key + "' given twice");
                    p.expect(":=");
                    switch (it->second) {
                    case ParamKind::Var: {
                        Var v = p.typed_var();
                        p.push_scope(v);
                        ++scoped;
                        j.params.entries.emplace_back(key, v);
                        break;
                    }
                    case ParamKind::Formula:
                        j.params.entries.emplace_back(key, p.formula());
                        break;
                    case ParamKind::Term:
                        j.params.entries.emplace_back(key, p.term());
                        break;
                    }
                    if (!p.accept(";")) {
                        p.expect("}");
                        break;
                    }
                }
            }
            while (scoped--) p.pop_scope();
        } else if (kind == "rule") {
            j.kind = Justification::Kind::Rule;
            const Token& at = p.peek();
            j.name = p.ident();
            if (!find_rule(j.name)) p.fail_at(at, "unknown rule '" + j.name + "'");
            p.expect("from");
            do j.premises.push_back(static_cast<int>(p.number()));
            while (p.accept(","));
        } else if (kind == "assumption") {
            j.kind = Justification::Kind::Assumption;
            j.name = p.ident();
        } else {
            p.fail_at(kt, "expected 'axiom', 'rule' or 'assumption'");
        }
        p.accept(";");
        out.lines.push_back(std::move(line));
    }
    return out;
}

std::string to_string(const ParamValue& v) {
    if (auto* f = std::get_if<Formula>(&v)) return to_string(*f);
    if (auto* t = std::get_if<Term>(&v)) return to_string(*t);
    const Var& x = std::get<Var>(v);
    return x.name + ":" + to_string(x.type);
}

std::string to_string(const Justification& j) {
    switch (j.kind) {
    case Justification::Kind::Axiom: {
        std::string out = "axiom " + j.name;
        if (!j.params.entries.empty()) {
            out += " {";
            for (std::size_t i = 0; i < j.params.entries.size(); ++i) {
                if (i) out += "; ";
                out += j.params.entries[i].first + " := " + to_string(j.params.entries[i].second);
            }
            out += "}";
        }
        return out;
    }
    case Justification::Kind::Rule: {
        std::string out = "rule " + j.name + " from ";
        for (std::size_t i = 0; i < j.premises.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(j.premises[i]);
        }
        return out;
    }
    case Justification::Kind::Assumption:
        return "assumption " + j.name;
    }
    return {};
}

std::string to_string(const ProofScript& p) {
    std::string out = signature_text(p.sig);
    if (!p.ctx.empty()) out += context_text(p.ctx) + "\n";
    for (auto& a : p.assumptions) out += "assume " + a.name + " : " + to_string(a.formula) + ";\n";
    for (auto& l : p.lines)
        out += std::to_string(l.number) + ") " + to_string(l.formula) + " BY " + to_string(l.just) + "\n";
    return out;
}

// ---------------------------------------------------------------- instances

namespace {

Term c(ConstKind k, std::vector<Type> ix = {}) { return Term::constant(k, std::move(ix)); }

Type star_element(const Term& t, const char* what) {
    if (!t.type().is_star()) throw Error(std::string(what) + " must have a star type, got " + to_string(t.type()));
    return t.type().element();
}

void same_type(const Term& a, const Term& b) {
    if (a.type() != b.type())
        throw Error("'" + to_string(a) + "' and '" + to_string(b) + "' have different types (" +
                    to_string(a.type()) + " vs " + to_string(b.type()) + ")");
}

bool replaces(const Term& a, const Term& b, const Term& x, const Term& y) {
    if (a == b) return true;
    if (a == x && b == y) return true;
    if (a.is_app() && b.is_app()) return replaces(a.fun(), b.fun(), x, y) && replaces(a.arg(), b.arg(), x, y);
    return false;
}

bool replaces(const Formula& a, const Formula& b, const Term& x, const Term& y) {
    using K = Formula::Kind;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case K::Bot:
        return true;
    case K::Eq:
    case K::Mem:
        return a.rho() == b.rho() && replaces(a.lhs(), b.lhs(), x, y) && replaces(a.rhs(), b.rhs(), x, y);
    case K::Rel:
        if (a.rel_name() != b.rel_name() || a.args().size() != b.args().size()) return false;
        for (std::size_t i = 0; i < a.args().size(); ++i)
            if (!replaces(a.args()[i], b.args()[i], x, y)) return false;
        return true;
    default:
        return false;
    }
}

void require_var_type(const Var& v, const Type& t, const char* what) {
    if (v.type != t)
        throw Error(std::string(what) + " '" + v.name + "' must have type " + to_string(t) + ", not " +
                    to_string(v.type));
}

} // namespace

Formula axiom_instance(const std::string& name, const Params& p, const Signature& sig,
                       const std::optional<Formula>& line) {
    const AxiomSchema* schema = find_axiom(name);
    if (!schema) throw Error("unknown axiom '" + name + "'");
    if (schema->arithmetic && sig.mode() != Mode::Arithmetic)
        throw Error("axiom " + name + " needs arithmetic mode");
    for (auto& [k, v] : p.entries)
        if (std::none_of(schema->params.begin(), schema->params.end(), [&](auto& e) { return e.first == k; }))
            throw Error("axiom " + name + " has no parameter '" + k + "'");
    using F = Formula;
    const Type nat = Type::ground("N");

    if (name == "DUP") {
        const F& a = p.formula("A");
        return F::imp(a, F::conj(a, a));
    }
    if (name == "CONTR") {
        const F& a = p.formula("A");
        return F::imp(F::disj(a, a), a);
    }
    if (name == "INL") return F::imp(p.formula("A"), F::disj(p.formula("A"), p.formula("B")));
    if (name == "PROJ") return F::imp(F::conj(p.formula("A"), p.formula("B")), p.formula("A"));
    if (name == "AND_COMM") {
        const F &a = p.formula("A"), &b = p.formula("B");
        return F::imp(F::conj(a, b), F::conj(b, a));
    }
    if (name == "OR_COMM") {
        const F &a = p.formula("A"), &b = p.formula("B");
        return F::imp(F::disj(a, b), F::disj(b, a));
    }
    if (name == "EFQ") return F::imp(F::bot(), p.formula("A"));
    if (name == "ALL_ELIM") {
        const Var& z = p.var("z");
        const F& a = p.formula("A");
        return F::imp(F::forall(z, a), subst_formula(a, z, p.term("t")));
    }
    if (name == "EX_INTRO") {
        const Var& z = p.var("z");
        const F& a = p.formula("A");
        return F::imp(subst_formula(a, z, p.term("t")), F::exists(z, a));
    }
    if (name == "EQ_REFL") {
        const Term& t = p.term("t");
        return F::eq(t.type(), t, t);
    }
    if (name == "EQ_SUBST") {
        const Term &x = p.term("x"), &y = p.term("y");
        same_type(x, y);
        const F& a = p.formula("A");
        if (!a.is_atomic()) throw Error("EQ_SUBST needs an atomic formula A");
        F premise = F::conj(F::eq(x.type(), x, y), a);
        if (!line) return F::imp(premise, a);
        const F& l = *line;
        if (l.kind() != F::Kind::Imp || !alpha_equal(l.left(), premise))
            throw Error("EQ_SUBST line must have the form " + to_string(premise) + " -> A'");
        if (!replaces(a, l.right(), x, y))
            throw Error("'" + to_string(l.right()) + "' is not obtained from '" + to_string(a) + "' by replacing " +
                        to_string(x) + " with " + to_string(y));
        return l;
    }
    if (name == "CONV") {
        const Term &t = p.term("t"), &u = p.term("u");
        same_type(t, u);
        if (normalize(t) != normalize(u))
            throw Error("'" + to_string(t) + "' and '" + to_string(u) + "' have different normal forms");
        return F::eq(t.type(), t, u);
    }
    if (name == "BALL_UNFOLD" || name == "BALL_FOLD" || name == "BEX_UNFOLD" || name == "BEX_FOLD") {
        const Var& z = p.var("z");
        const Term& t = p.term("t");
        const F& a = p.formula("A");
        Type rho = star_element(t, "bound t");
        require_var_type(z, rho, "bound variable");
        F member = F::mem(rho, Term::var(z), t);
        bool universal = name[1] == 'A';
        F bounded = universal ? F::bforall(z, t, a) : F::bexists(z, t, a);
        F unfolded = universal ? F::forall(z, F::imp(member, a)) : F::exists(z, F::conj(member, a));
        bool unfold = name.ends_with("UNFOLD");
        return unfold ? F::imp(bounded, unfolded) : F::imp(unfolded, bounded);
    }
    if (name == "SIGMA") {
        const Term &t = p.term("t"), &q = p.term("q"), &r = p.term("r");
        if (!q.type().is_arrow() || !t.type().is_arrow() || !t.type().codomain().is_arrow())
            throw Error("SIGMA needs t : r -> s -> u and q : r -> s");
        Type rho = r.type(), sigma = q.type().codomain(), tau = t.type().codomain().codomain();
        Term lhs = Term::apps(c(ConstKind::Sigma, {rho, sigma, tau}), {t, q, r});
        Term rhs = Term::apps(t, {r, Term::app(q, r)});
        return F::eq(tau, lhs, rhs);
    }
    if (name == "PI") {
        const Term &t = p.term("t"), &q = p.term("q");
        return F::eq(t.type(), Term::apps(c(ConstKind::Pi, {t.type(), q.type()}), {t, q}), t);
    }
    if (name == "SING_MEM" || name == "SING_MEM_REV") {
        const Term &w = p.term("w"), &x = p.term("x");
        same_type(w, x);
        Type rho = x.type();
        F mem = F::mem(rho, w, Term::app(c(ConstKind::Sing, {rho}), x));
        F eq = F::eq(rho, w, x);
        return name == "SING_MEM" ? F::imp(mem, eq) : F::imp(eq, mem);
    }
    if (name == "CUP_MEM" || name == "CUP_MEM_REV") {
        const Term &w = p.term("w"), &x = p.term("x"), &y = p.term("y");
        Type rho = w.type();
        Term cup = Term::apps(c(ConstKind::Cup, {rho}), {x, y});
        F whole = F::mem(rho, w, cup);
        F parts = F::disj(F::mem(rho, w, x), F::mem(rho, w, y));
        return name == "CUP_MEM" ? F::imp(whole, parts) : F::imp(parts, whole);
    }
    if (name == "BIGCUP_MEM") {
        const Term &z = p.term("z"), &x = p.term("x"), &w = p.term("w"), &y = p.term("y");
        Type rho = z.type(), tau = w.type();
        Term big = Term::apps(c(ConstKind::BigCup, {rho, tau}), {x, y});
        return F::imp(F::conj(F::mem(rho, z, x), F::mem(tau, w, Term::app(y, z))), F::mem(tau, w, big));
    }
    if (name == "BIGCUP_SING") {
        const Term &x = p.term("x"), &y = p.term("y");
        Type rho = x.type();
        Type tau = star_element(Term::app(y, x), "y x");
        Term lhs = Term::apps(c(ConstKind::BigCup, {rho, tau}), {Term::app(c(ConstKind::Sing, {rho}), x), y});
        return F::eq(Type::star(tau), lhs, Term::app(y, x));
    }
    if (name == "BIGCUP_CUP") {
        const Term &x = p.term("x"), &y = p.term("y"), &z = p.term("z");
        Type rho = star_element(x, "x");
        if (!z.type().is_arrow()) throw Error("z must be a function into a star type");
        Type tau = star_element(Term::app(z, Term::var("_", rho)), "z's result");
        Term big = c(ConstKind::BigCup, {rho, tau});
        Term lhs = Term::apps(big, {Term::apps(c(ConstKind::Cup, {rho}), {x, y}), z});
        Term rhs = Term::apps(c(ConstKind::Cup, {tau}), {Term::apps(big, {x, z}), Term::apps(big, {y, z})});
        return F::eq(Type::star(tau), lhs, rhs);
    }
    if (name == "AC") {
        const Var &z = p.var("z"), &w = p.var("w"), &W = p.var("W");
        const F& a = p.formula("A");
        require_var_type(W, Type::arrow(z.type, Type::star(w.type)), "choice variable");
        if (z.name == w.name || z.name == W.name || w.name == W.name) throw Error("AC variables must be distinct");
        if (occurs_free(W, a)) throw Error("'" + W.name + "' must not occur free in A");
        Term wz = Term::app(Term::var(W), Term::var(z));
        return F::imp(F::forall(z, F::exists(w, a)), F::exists(W, F::forall(z, F::bexists(w, wz, a))));
    }
    if (name == "IP") {
        const Var &w = p.var("w"), &z = p.var("z");
        const F &a = p.formula("A"), &b = p.formula("B");
        require_var_type(z, Type::star(w.type), "set variable");
        if (!is_exists_free(a)) throw Error("IP premise '" + to_string(a) + "' is not ex-free");
        if (z.name == w.name) throw Error("IP variables must be distinct");
        if (occurs_free(z, a) || occurs_free(z, b)) throw Error("'" + z.name + "' must not occur free in A or B");
        return F::imp(F::imp(a, F::exists(w, b)), F::exists(z, F::imp(a, F::bexists(w, Term::var(z), b))));
    }
    if (name == "SUC_NZ") {
        const Term& t = p.term("t");
        return F::imp(F::eq(nat, Term::app(c(ConstKind::Suc), t), numeral(0)), F::bot());
    }
    if (name == "SUC_INJ") {
        const Term &t = p.term("t"), &u = p.term("u");
        Term s = c(ConstKind::Suc);
        return F::imp(F::eq(nat, Term::app(s, t), Term::app(s, u)), F::eq(nat, t, u));
    }
    if (name == "REC_ZERO") {
        const Term &q = p.term("q"), &r = p.term("r");
        return F::eq(q.type(), Term::apps(c(ConstKind::Rec, {q.type()}), {numeral(0), q, r}), q);
    }
    if (name == "REC_SUC") {
        const Term &t = p.term("t"), &q = p.term("q"), &r = p.term("r");
        Term rec = c(ConstKind::Rec, {q.type()});
        Term lhs = Term::apps(rec, {Term::app(c(ConstKind::Suc), t), q, r});
        Term rhs = Term::apps(r, {Term::apps(rec, {t, q, r}), t});
        return F::eq(q.type(), lhs, rhs);
    }
    if (name == "IND") {
        const Var& n = p.var("n");
        const F& a = p.formula("A");
        require_var_type(n, nat, "induction variable");
        F base = subst_formula(a, n, numeral(0));
        F step = F::forall(n, F::imp(a, subst_formula(a, n, Term::app(c(ConstKind::Suc), Term::var(n)))));
        return F::imp(F::conj(base, step), F::forall(n, a));
    }
    throw InternalError("axiom " + name + " has no instance builder");
}

// ---------------------------------------------------------------- checking

namespace {

struct Checker {
    const ProofScript& p;
    CheckResult result;

    void error(int line, std::string msg) { result.errors.push_back({line, std::move(msg)}); }

    static std::string show(const Formula& f) { return "'" + to_string(f) + "'"; }

    void expect_alpha(int line, const Formula& got, const Formula& want, const std::string& what) {
        if (!alpha_equal(got, want)) error(line, what + ": expected " + show(want) + ", found " + show(got));
    }

    bool is(const Formula& f, Formula::Kind k) { return f.kind() == k; }

    void rule(const ProofLine& l, RuleKind r, const std::vector<const Formula*>& prem) {
        using K = Formula::Kind;
        const Formula& c = l.formula;
        const int n = l.number;
        switch (r) {
        case RuleKind::MP: {
            const Formula &a = *prem[0], &ab = *prem[1];
            if (!is(ab, K::Imp)) return error(n, "MP: second premise is not an implication");
            expect_alpha(n, a, ab.left(), "MP: first premise does not match the antecedent");
            expect_alpha(n, c, ab.right(), "MP: conclusion does not match the consequent");
            return;
        }
        case RuleKind::SYL: {
            const Formula &ab = *prem[0], &bc = *prem[1];
            if (!is(ab, K::Imp) || !is(bc, K::Imp)) return error(n, "SYL: premises must be implications");
            expect_alpha(n, bc.left(), ab.right(), "SYL: middle formulas differ");
            expect_alpha(n, c, Formula::imp(ab.left(), bc.right()), "SYL: conclusion");
            return;
        }
        case RuleKind::OR_MONO: {
            const Formula& ab = *prem[0];
            if (!is(ab, K::Imp)) return error(n, "OR_MONO: premise is not an implication");
            if (!is(c, K::Imp) || !is(c.left(), K::Or)) return error(n, "OR_MONO: conclusion must be C | A -> C | B");
            const Formula& side = c.left().left();
            expect_alpha(n, c, Formula::imp(Formula::disj(side, ab.left()), Formula::disj(side, ab.right())),
                         "OR_MONO: conclusion");
            return;
        }
        case RuleKind::EXPORT: {
            const Formula& f = *prem[0];
            if (!is(f, K::Imp) || !is(f.left(), K::And)) return error(n, "EXPORT: premise must be A & B -> C");
            expect_alpha(n, c, Formula::imp(f.left().left(), Formula::imp(f.left().right(), f.right())),
                         "EXPORT: conclusion");
            return;
        }
        case RuleKind::IMPORT: {
            const Formula& f = *prem[0];
            if (!is(f, K::Imp) || !is(f.right(), K::Imp)) return error(n, "IMPORT: premise must be A -> (B -> C)");
            expect_alpha(n, c, Formula::imp(Formula::conj(f.left(), f.right().left()), f.right().right()),
                         "IMPORT: conclusion");
            return;
        }
        case RuleKind::ALL_INTRO: {
            const Formula& f = *prem[0];
            if (!is(f, K::Imp)) return error(n, "ALL_INTRO: premise must be B -> A");
            if (!is(c, K::Imp) || !is(c.right(), K::Forall))
                return error(n, "ALL_INTRO: conclusion must be B -> all z . A");
            const Var& z = c.right().var();
            expect_alpha(n, c.left(), f.left(), "ALL_INTRO: antecedent");
            expect_alpha(n, c.right().body(), f.right(), "ALL_INTRO: quantified formula");
            if (occurs_free(z, f.left()))
                error(n, "ALL_INTRO: eigenvariable '" + z.name + "' occurs free in " + show(f.left()));
            return;
        }
        case RuleKind::EX_ELIM: {
            const Formula& f = *prem[0];
            if (!is(f, K::Imp)) return error(n, "EX_ELIM: premise must be A -> B");
            if (!is(c, K::Imp) || !is(c.left(), K::Exists))
                return error(n, "EX_ELIM: conclusion must be ex z . A -> B");
            const Var& z = c.left().var();
            expect_alpha(n, c.left().body(), f.left(), "EX_ELIM: quantified formula");
            expect_alpha(n, c.right(), f.right(), "EX_ELIM: consequent");
            if (occurs_free(z, f.right()))
                error(n, "EX_ELIM: eigenvariable '" + z.name + "' occurs free in " + show(f.right()));
            return;
        }
        }
    }

    void run() {
        for (auto& a : p.assumptions) {
            for (auto& d : well_formed(a.formula, p.ctx, p.sig)) error(0, "assumption " + a.name + ": " + d);
            if (!is_exists_free(a.formula)) error(0, "assumption " + a.name + " is not ex-free");
        }
        int previous = 0;
        bool first = true;
        for (auto& l : p.lines) {
            if (!first && l.number <= previous) error(l.number, "line numbers must increase");
            first = false;
            previous = l.number;
            for (auto& d : well_formed(l.formula, p.ctx, p.sig)) error(l.number, d);
            const Justification& j = l.just;
            try {
                switch (j.kind) {
                case Justification::Kind::Axiom: {
                    Formula inst = axiom_instance(j.name, j.params, p.sig, l.formula);
                    expect_alpha(l.number, l.formula, inst, "axiom " + j.name + " instance");
                    break;
                }
                case Justification::Kind::Assumption: {
                    const Assumption* a = p.assumption(j.name);
                    if (!a) {
                        error(l.number, "unknown assumption '" + j.name + "'");
                        break;
                    }
                    expect_alpha(l.number, l.formula, a->formula, "assumption " + j.name);
                    break;
                }
                case Justification::Kind::Rule: {
                    auto r = find_rule(j.name);
                    if (!r) {
                        error(l.number, "unknown rule '" + j.name + "'");
                        break;
                    }
                    if (j.premises.size() != rule_arity(*r)) {
                        error(l.number, j.name + " takes " + std::to_string(rule_arity(*r)) + " premises");
                        break;
                    }
                    std::vector<const Formula*> prem;
                    for (int k : j.premises) {
                        const ProofLine* pl = p.line(k);
                        if (!pl || k >= l.number) {
                            error(l.number, "premise " + std::to_string(k) + " is not an earlier line");
                            break;
                        }
                        prem.push_back(&pl->formula);
                    }
                    if (prem.size() == j.premises.size()) rule(l, *r, prem);
                    break;
                }
                }
            } catch (const Error& e) {
                error(l.number, e.what());
            }
        }
        if (p.lines.empty()) error(0, "proof has no lines");
    }
};

} // namespace

CheckResult check_proof(const ProofScript& p) {
    Checker c{p, {}};
    c.run();
    return c.result;
}

} // namespace hmr
