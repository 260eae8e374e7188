#pragma once

#include <string>

#include "hmr/formula.hpp"
#include "hmr/syntax.hpp"
#include "hmr/term.hpp"

namespace th {

inline hmr::Type N() { return hmr::Type::ground("N"); }
inline hmr::Type G() { return hmr::Type::ground("G"); }
inline hmr::Type star(hmr::Type t) { return hmr::Type::star(std::move(t)); }
inline hmr::Type arr(hmr::Type a, hmr::Type b) { return hmr::Type::arrow(std::move(a), std::move(b)); }

/// Logic signature with constants a, b, c, d : G and relations P/1, Q/1, R/2.
inline hmr::Signature logic() {
    return hmr::parse_signature("mode logic; const a : G; const b : G; const c : G; const d : G;"
                                "rel P / 1; rel Q / 1; rel R / 2;");
}
inline hmr::Signature arith() { return hmr::Signature::arithmetic(); }

inline hmr::Term term(const std::string& s, const hmr::Signature& sig = arith(), const hmr::Context& ctx = {}) {
    return hmr::parse_term(s, sig, ctx);
}
inline hmr::Formula formula(const std::string& s, const hmr::Signature& sig = arith(), const hmr::Context& ctx = {}) {
    return hmr::parse_formula(s, sig, ctx);
}

} // namespace th
