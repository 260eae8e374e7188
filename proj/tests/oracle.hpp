#pragma once

// Denotational evaluator for closed terms, written against the intended
// meaning of the constants rather than the rewrite rules. Sets are finite
// lists of values; functions are host closures.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hmr/term.hpp"

namespace oracle {

struct Value;
using V = std::shared_ptr<const Value>;

struct Value {
    enum Kind { Nat, Sym, Set, Fun } kind;
    std::uint64_t n = 0;
    std::string sym;
    std::vector<V> elems;
    std::function<V(V)> fn;
};

inline V nat(std::uint64_t n) { return std::make_shared<Value>(Value{Value::Nat, n}); }
inline V sym(std::string s) { return std::make_shared<Value>(Value{Value::Sym, 0, std::move(s)}); }
inline V set(std::vector<V> es) { return std::make_shared<Value>(Value{Value::Set, 0, {}, std::move(es)}); }
inline V fun(std::function<V(V)> f) { return std::make_shared<Value>(Value{Value::Fun, 0, {}, {}, std::move(f)}); }
inline V call(const V& f, const V& a) { return f->fn(a); }

inline V denote(const hmr::Term& t, const std::map<std::string, V>& env = {}) {
    using hmr::ConstKind;
    switch (t.kind()) {
    case hmr::Term::Kind::Var: return env.at(t.name());
    case hmr::Term::Kind::App: return call(denote(t.fun(), env), denote(t.arg(), env));
    case hmr::Term::Kind::Const: break;
    }
    switch (t.const_kind()) {
    case ConstKind::Zero: return nat(0);
    case ConstKind::Suc: return fun([](V a) { return nat(a->n + 1); });
    case ConstKind::Pi: return fun([](V a) { return fun([a](V) { return a; }); });
    case ConstKind::Sigma:
        return fun([](V f) {
            return fun([f](V g) { return fun([f, g](V x) { return call(call(f, x), call(g, x)); }); });
        });
    case ConstKind::Sing: return fun([](V a) { return set({a}); });
    case ConstKind::Cup:
        return fun([](V a) {
            return fun([a](V b) {
                auto es = a->elems;
                es.insert(es.end(), b->elems.begin(), b->elems.end());
                return set(std::move(es));
            });
        });
    case ConstKind::BigCup:
        return fun([](V x) {
            return fun([x](V f) {
                std::vector<V> es;
                for (auto& e : x->elems) {
                    V part = call(f, e);
                    es.insert(es.end(), part->elems.begin(), part->elems.end());
                }
                return set(std::move(es));
            });
        });
    case ConstKind::Rec:
        return fun([](V n) {
            return fun([n](V q) {
                return fun([n, q](V r) {
                    V acc = q;
                    for (std::uint64_t i = 0; i < n->n; ++i) acc = call(call(r, acc), nat(i));
                    return acc;
                });
            });
        });
    case ConstKind::User: return sym(t.name());
    }
    return nullptr;
}

/// Observational equality at type `t`. Arrow types with domain N are probed
/// at 0..3; other arrow types compare as equal (not observable here).
inline bool same(const V& a, const V& b, const hmr::Type& t) {
    switch (t.kind()) {
    case hmr::Type::Kind::Ground:
        return a->kind == b->kind && a->n == b->n && a->sym == b->sym;
    case hmr::Type::Kind::Star: {
        auto covered = [&](const V& x, const V& y) {
            for (auto& e : x->elems) {
                bool found = false;
                for (auto& f : y->elems) found = found || same(e, f, t.element());
                if (!found) return false;
            }
            return true;
        };
        return covered(a, b) && covered(b, a);
    }
    case hmr::Type::Kind::Arrow:
        if (t.domain() != hmr::Type::ground("N")) return true;
        for (std::uint64_t i = 0; i < 4; ++i)
            if (!same(call(a, nat(i)), call(b, nat(i)), t.codomain())) return false;
        return true;
    }
    return false;
}

/// Deduplicated numerals of an N* value, sorted.
inline std::vector<std::uint64_t> numerals(const V& s) {
    std::vector<std::uint64_t> out;
    for (auto& e : s->elems) out.push_back(e->n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace oracle
