#include "hmr/term.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_set>

#include "hmr/error.hpp"

namespace hmr {

// ---------------------------------------------------------------- signature

Type Signature::ground() const {
    return Type::ground(mode_ == Mode::Arithmetic ? "N" : "G");
}

void Signature::add_function(std::string name, int arity) {
    if (arity < 0) throw TypeError("negative arity for '" + name + "'");
    functions_.push_back({std::move(name), arity});
}

void Signature::add_relation(std::string name, int arity) {
    if (arity < 0) throw TypeError("negative arity for '" + name + "'");
    relations_.push_back({std::move(name), arity});
}

const FunSymbol* Signature::find_function(const std::string& name) const {
    for (auto& f : functions_)
        if (f.name == name) return &f;
    return nullptr;
}

const RelSymbol* Signature::find_relation(const std::string& name) const {
    for (auto& r : relations_)
        if (r.name == name) return &r;
    return nullptr;
}

void Signature::validate() const {
    std::unordered_set<std::string> seen;
    for (auto& f : functions_)
        if (!seen.insert(f.name).second) throw TypeError("duplicate symbol '" + f.name + "'");
    for (auto& r : relations_)
        if (!seen.insert(r.name).second) throw TypeError("duplicate symbol '" + r.name + "'");
    if (mode_ == Mode::Arithmetic) {
        // closed normal N-terms must stay numerals
        if (!functions_.empty())
            throw TypeError("arithmetic signatures take no first-order function symbols ('" +
                            functions_.front().name + "')");
        return;
    }
    bool has_constant = std::any_of(functions_.begin(), functions_.end(),
                                    [](const FunSymbol& f) { return f.arity == 0; });
    if (!has_constant) throw TypeError("signature needs at least one constant of ground type");
}

// ---------------------------------------------------------------- constants

namespace {

Type nat() { return Type::ground("N"); }

Type fn(Type a, Type b) { return Type::arrow(std::move(a), std::move(b)); }

Type builtin_type(ConstKind kind, const std::vector<Type>& ix) {
    if (ix.size() != index_count(kind))
        throw TypeError(std::string(const_keyword(kind)) + " expects " +
                        std::to_string(index_count(kind)) + " type indices, got " +
                        std::to_string(ix.size()));
    switch (kind) {
    case ConstKind::Pi: // s -> t -> s
        return fn(ix[0], fn(ix[1], ix[0]));
    case ConstKind::Sigma: // (r -> s -> t) -> (r -> s) -> r -> t
        return fn(fn(ix[0], fn(ix[1], ix[2])), fn(fn(ix[0], ix[1]), fn(ix[0], ix[2])));
    case ConstKind::Sing: // s -> s*
        return fn(ix[0], Type::star(ix[0]));
    case ConstKind::Cup: // s* -> s* -> s*
        return fn(Type::star(ix[0]), fn(Type::star(ix[0]), Type::star(ix[0])));
    case ConstKind::BigCup: // s* -> (s -> t*) -> t*
        return fn(Type::star(ix[0]), fn(fn(ix[0], Type::star(ix[1])), Type::star(ix[1])));
    case ConstKind::Rec: // N -> s -> (s -> N -> s) -> s
        return fn(nat(), fn(ix[0], fn(fn(ix[0], fn(nat(), ix[0])), ix[0])));
    case ConstKind::Zero:
        return nat();
    case ConstKind::Suc:
        return fn(nat(), nat());
    case ConstKind::User:
        break;
    }
    throw InternalError("user constants have no schema type");
}

} // namespace

const char* const_keyword(ConstKind kind) {
    switch (kind) {
    case ConstKind::Pi: return "PI";
    case ConstKind::Sigma: return "SIG";
    case ConstKind::Sing: return "SET";
    case ConstKind::Cup: return "CUP";
    case ConstKind::BigCup: return "BIGCUP";
    case ConstKind::Rec: return "REC";
    case ConstKind::Zero: return "ZERO";
    case ConstKind::Suc: return "SUC";
    case ConstKind::User: return "<user>";
    }
    return "?";
}

std::size_t index_count(ConstKind kind) {
    switch (kind) {
    case ConstKind::Pi: return 2;
    case ConstKind::Sigma: return 3;
    case ConstKind::Sing: return 1;
    case ConstKind::Cup: return 1;
    case ConstKind::BigCup: return 2;
    case ConstKind::Rec: return 1;
    default: return 0;
    }
}

Type type_of_constant(ConstKind kind, const std::vector<Type>& indices, const Signature& sig) {
    if (kind == ConstKind::User) throw TypeError("user constants are looked up by name");
    bool arithmetic = kind == ConstKind::Rec || kind == ConstKind::Zero || kind == ConstKind::Suc;
    if (arithmetic && sig.mode() != Mode::Arithmetic)
        throw TypeError(std::string(const_keyword(kind)) + " is only available in arithmetic mode");
    Type t = builtin_type(kind, indices);
    // indices must live over the signature's ground type
    std::function<void(const Type&)> check = [&](const Type& ty) {
        switch (ty.kind()) {
        case Type::Kind::Ground:
            if (ty != sig.ground())
                throw TypeError("ground type '" + ty.ground_name() + "' is not '" +
                                to_string(sig.ground()) + "' in this signature");
            break;
        case Type::Kind::Arrow:
            check(ty.domain());
            check(ty.codomain());
            break;
        case Type::Kind::Star:
            check(ty.element());
            break;
        }
    };
    check(t);
    return t;
}

Type type_of_user_constant(const std::string& name, const Signature& sig) {
    const FunSymbol* f = sig.find_function(name);
    if (!f) throw TypeError("unknown constant '" + name + "'");
    Type g = sig.ground();
    std::vector<Type> args(static_cast<std::size_t>(f->arity), g);
    return arrows(args, g);
}

// ---------------------------------------------------------------- term nodes

struct Term::Node {
    Kind kind;
    Type type;
    ConstKind ckind = ConstKind::User;
    std::vector<Type> indices;
    std::string name;
    std::optional<Var> var;
    std::optional<Term> fun;
    std::optional<Term> arg;
    // spine caches
    const Node* head = nullptr;
    std::size_t nargs = 0;
    const Node* first_arg = nullptr;
    bool normal = true;
    bool redex = false;
    bool closed = true;
    std::uint64_t size = 1;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                              : a + b;
}

} // namespace

Term Term::constant(ConstKind kind, std::vector<Type> indices) {
    if (kind == ConstKind::User) throw TypeError("use Term::user_constant for signature symbols");
    Type t = builtin_type(kind, indices);
    auto node = std::make_shared<Node>(Node{Kind::Const, t});
    node->ckind = kind;
    node->indices = std::move(indices);
    node->name = const_keyword(kind);
    std::size_t h = mix(0xc0, static_cast<std::size_t>(kind));
    for (auto& ix : node->indices) h = mix(h, ix.hash());
    node->hash = h;
    node->head = node.get();
    return Term(std::move(node));
}

Term Term::user_constant(std::string name, Type type) {
    auto node = std::make_shared<Node>(Node{Kind::Const, std::move(type)});
    node->ckind = ConstKind::User;
    node->name = std::move(name);
    node->hash = mix(mix(0xc1, std::hash<std::string>{}(node->name)), node->type.hash());
    node->head = node.get();
    return Term(std::move(node));
}

Term Term::var(Var v) {
    auto node = std::make_shared<Node>(Node{Kind::Var, v.type});
    node->name = v.name;
    node->hash = mix(mix(0x7a, std::hash<std::string>{}(v.name)), v.type.hash());
    node->var = std::move(v);
    node->closed = false;
    node->head = node.get();
    return Term(std::move(node));
}

namespace {

std::size_t rule_arity(ConstKind k) {
    switch (k) {
    case ConstKind::Pi: return 2;
    case ConstKind::Sigma: return 3;
    case ConstKind::BigCup: return 2;
    case ConstKind::Rec: return 3;
    default: return 0;
    }
}

} // namespace

Term Term::app(Term fun, Term arg) {
    const Type& ft = fun.type();
    if (!ft.is_arrow())
        throw TypeError("cannot apply '" + to_string(fun) + "' of non-function type " + to_string(ft));
    if (ft.domain() != arg.type())
        throw TypeError("argument type mismatch applying '" + to_string(fun) + "': expected " +
                        to_string(ft.domain()) + ", got " + to_string(arg.type()) + " for '" +
                        to_string(arg) + "'");
    auto node = std::make_shared<Node>(Node{Kind::App, ft.codomain()});
    const Node& f = *fun.node_;
    const Node& a = *arg.node_;
    node->head = f.head;
    node->nargs = f.nargs + 1;
    node->first_arg = f.nargs == 0 ? &a : f.first_arg;
    node->closed = f.closed && a.closed;
    node->size = sat_add(f.size, a.size);
    node->hash = mix(mix(0xa9, f.hash), a.hash);

    const Node& h = *node->head;
    bool redex = false;
    if (h.kind == Kind::Const && node->nargs == rule_arity(h.ckind) && node->nargs > 0) {
        const Node& first = *node->first_arg;
        switch (h.ckind) {
        case ConstKind::Pi:
        case ConstKind::Sigma:
            redex = true;
            break;
        case ConstKind::BigCup: {
            const Node& fh = *first.head;
            redex = fh.kind == Kind::Const && ((fh.ckind == ConstKind::Sing && first.nargs == 1) ||
                                               (fh.ckind == ConstKind::Cup && first.nargs == 2));
            break;
        }
        case ConstKind::Rec: {
            const Node& fh = *first.head;
            redex = fh.kind == Kind::Const && ((fh.ckind == ConstKind::Zero && first.nargs == 0) ||
                                               (fh.ckind == ConstKind::Suc && first.nargs == 1));
            break;
        }
        default:
            break;
        }
    }
    node->redex = redex;
    node->normal = f.normal && a.normal && !redex;
    node->fun = std::move(fun);
    node->arg = std::move(arg);
    return Term(std::move(node));
}

Term Term::apps(Term fun, std::span<const Term> args) {
    for (auto& a : args) fun = app(std::move(fun), a);
    return fun;
}

Term::Kind Term::kind() const { return node_->kind; }
const Type& Term::type() const { return node_->type; }
ConstKind Term::const_kind() const { return node_->ckind; }
const std::vector<Type>& Term::indices() const { return node_->indices; }
const std::string& Term::name() const { return node_->name; }
const Var& Term::variable() const { return *node_->var; }
const Term& Term::fun() const { return *node_->fun; }
const Term& Term::arg() const { return *node_->arg; }
std::size_t Term::arg_count() const { return node_->nargs; }
bool Term::is_normal() const { return node_->normal; }
bool Term::is_redex() const { return node_->redex; }
bool Term::is_closed() const { return node_->closed; }
std::uint64_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }

const Term& Term::head() const {
    const Term* t = this;
    while (t->is_app()) t = &t->fun();
    return *t;
}

std::vector<Term> Term::spine_args() const {
    std::vector<Term> args;
    const Term* t = this;
    while (t->is_app()) {
        args.push_back(t->arg());
        t = &t->fun();
    }
    std::reverse(args.begin(), args.end());
    return args;
}

bool operator==(const Term& a, const Term& b) {
    const Term::Node* x = a.node_.get();
    const Term::Node* y = b.node_.get();
    // iterate down the function side to keep recursion shallow on long spines
    while (true) {
        if (x == y) return true;
        if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
        switch (x->kind) {
        case Term::Kind::Const:
            return x->ckind == y->ckind && x->name == y->name && x->type == y->type &&
                   x->indices == y->indices;
        case Term::Kind::Var:
            return *x->var == *y->var;
        case Term::Kind::App:
            if (!(*x->arg == *y->arg)) return false;
            x = x->fun->node_.get();
            y = y->fun->node_.get();
            break;
        }
    }
}

// ---------------------------------------------------------------- context

Context::Context(std::vector<Var> vars) {
    for (auto& v : vars) add(std::move(v));
}

void Context::add(Var v) {
    if (find(v.name)) throw TypeError("duplicate context variable '" + v.name + "'");
    vars_.push_back(std::move(v));
}

const Var* Context::find(const std::string& name) const {
    for (auto& v : vars_)
        if (v.name == name) return &v;
    return nullptr;
}

bool Context::contains(const Var& v) const {
    const Var* found = find(v.name);
    return found && found->type == v.type;
}

std::vector<Type> Context::types() const {
    std::vector<Type> out;
    for (auto& v : vars_) out.push_back(v.type);
    return out;
}

// ---------------------------------------------------------------- operations

Type typecheck(const Term& t, const Context& ctx) {
    switch (t.kind()) {
    case Term::Kind::Const:
        return t.type();
    case Term::Kind::Var: {
        const Var* v = ctx.find(t.variable().name);
        if (!v) throw UnboundVariable("unbound variable '" + t.variable().name + "'");
        if (v->type != t.variable().type)
            throw TypeError("variable '" + v->name + "' declared " + to_string(v->type) + ", used at " +
                            to_string(t.variable().type));
        return v->type;
    }
    case Term::Kind::App: {
        Type f = typecheck(t.fun(), ctx);
        Type a = typecheck(t.arg(), ctx);
        if (!f.is_arrow()) throw TypeError("application of non-function '" + to_string(t.fun()) + "'");
        if (f.domain() != a)
            throw TypeError("application type mismatch: expected " + to_string(f.domain()) + ", got " +
                            to_string(a));
        return f.codomain();
    }
    }
    throw InternalError("unreachable");
}

Term subst_term(const Term& t, const Var& x, const Term& s) {
    if (x.type != s.type())
        throw TypeError("substituting " + to_string(s.type()) + " term for variable '" + x.name + "' of type " +
                        to_string(x.type));
    if (t.is_closed()) return t;
    switch (t.kind()) {
    case Term::Kind::Const:
        return t;
    case Term::Kind::Var:
        return t.variable() == x ? s : t;
    case Term::Kind::App: {
        Term f = subst_term(t.fun(), x, s);
        Term a = subst_term(t.arg(), x, s);
        if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
        return Term::app(std::move(f), std::move(a));
    }
    }
    throw InternalError("unreachable");
}

bool occurs(const Var& x, const Term& t) {
    if (t.is_closed()) return false;
    switch (t.kind()) {
    case Term::Kind::Const: return false;
    case Term::Kind::Var: return t.variable() == x;
    case Term::Kind::App: return occurs(x, t.fun()) || occurs(x, t.arg());
    }
    return false;
}

namespace {

void collect_vars(const Term& t, std::vector<Var>& out) {
    if (t.is_closed()) return;
    if (t.is_var()) {
        if (std::find(out.begin(), out.end(), t.variable()) == out.end()) out.push_back(t.variable());
        return;
    }
    if (t.is_app()) {
        collect_vars(t.fun(), out);
        collect_vars(t.arg(), out);
    }
}

} // namespace

std::vector<Var> free_vars(const Term& t) {
    std::vector<Var> out;
    collect_vars(t, out);
    return out;
}

Term numeral(std::uint64_t n) {
    Term t = Term::constant(ConstKind::Zero);
    Term s = Term::constant(ConstKind::Suc);
    for (std::uint64_t i = 0; i < n; ++i) t = Term::app(s, t);
    return t;
}

std::optional<std::uint64_t> numeral_value(const Term& t) {
    std::uint64_t n = 0;
    const Term* cur = &t;
    while (true) {
        if (cur->is_const() && cur->const_kind() == ConstKind::Zero) return n;
        if (cur->is_app() && cur->fun().is_const() && cur->fun().const_kind() == ConstKind::Suc) {
            ++n;
            cur = &cur->arg();
            continue;
        }
        return std::nullopt;
    }
}

Term inhabitant(const Type& t, const Signature& sig) {
    switch (t.kind()) {
    case Type::Kind::Ground: {
        if (sig.mode() == Mode::Arithmetic) return Term::constant(ConstKind::Zero);
        for (auto& f : sig.functions())
            if (f.arity == 0) return Term::user_constant(f.name, sig.ground());
        throw TypeError("signature has no ground constant");
    }
    case Type::Kind::Star:
        return Term::app(Term::constant(ConstKind::Sing, {t.element()}), inhabitant(t.element(), sig));
    case Type::Kind::Arrow:
        return Term::app(Term::constant(ConstKind::Pi, {t.codomain(), t.domain()}),
                         inhabitant(t.codomain(), sig));
    }
    throw InternalError("unreachable");
}

namespace {

void print_term(std::string& out, const Term& t, bool as_arg) {
    if (auto n = numeral_value(t)) {
        out += std::to_string(*n);
        return;
    }
    switch (t.kind()) {
    case Term::Kind::Var:
        out += t.variable().name;
        return;
    case Term::Kind::Const:
        out += t.name();
        if (!t.indices().empty()) {
            out += '[';
            for (std::size_t i = 0; i < t.indices().size(); ++i) {
                if (i) out += ',';
                out += to_string(t.indices()[i]);
            }
            out += ']';
        }
        return;
    case Term::Kind::App:
        break;
    }
    (void)as_arg;
    out += '(';
    print_term(out, t.head(), true);
    for (auto& a : t.spine_args()) {
        out += ' ';
        print_term(out, a, true);
    }
    out += ')';
}

} // namespace

std::string to_string(const Term& t) {
    std::string out;
    print_term(out, t, false);
    return out;
}

} // namespace hmr
