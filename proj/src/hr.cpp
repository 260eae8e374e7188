#include "hmr/hr.hpp"

#include <cctype>

#include "hmr/error.hpp"

namespace hmr {

std::string Freshener::fresh(const std::string& base) {
    std::string name = base;
    while (is_taken(name)) name = base + "#" + std::to_string(counter_++);
    taken_.insert(name);
    return name;
}

namespace {

std::string set_name(const std::string& var) {
    std::string out = var;
    for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::vector<Term> as_terms(const std::vector<Var>& xs) {
    std::vector<Term> out;
    out.reserve(xs.size());
    for (auto& x : xs) out.push_back(Term::var(x));
    return out;
}

std::vector<Type> types_of(const std::vector<Var>& xs) {
    std::vector<Type> out;
    out.reserve(xs.size());
    for (auto& x : xs) out.push_back(x.type);
    return out;
}

HRResult translate(const Formula& a, Freshener& fr) {
    using K = Formula::Kind;
    switch (a.kind()) {
    case K::Bot:
    case K::Eq:
    case K::Mem:
    case K::Rel:
        return {{}, a};
    case K::And:
    case K::Or: {
        HRResult l = translate(a.left(), fr);
        HRResult r = translate(a.right(), fr);
        std::vector<Var> evars = l.evars;
        evars.insert(evars.end(), r.evars.begin(), r.evars.end());
        Formula m = a.kind() == K::And ? Formula::conj(l.matrix, r.matrix) : Formula::disj(l.matrix, r.matrix);
        return {std::move(evars), m};
    }
    case K::Imp: {
        HRResult l = translate(a.left(), fr);
        HRResult r = translate(a.right(), fr);
        std::vector<Type> xtypes = types_of(l.evars);
        std::vector<Term> xs = as_terms(l.evars);
        std::vector<Var> us;
        Formula body = r.matrix;
        for (auto& u : r.evars) {
            Var big{u.name, arrows(xtypes, u.type)};
            body = subst_formula(body, u, Term::apps(Term::var(big), xs));
            us.push_back(big);
        }
        Formula m = Formula::imp(l.matrix, body);
        for (auto it = l.evars.rbegin(); it != l.evars.rend(); ++it) m = Formula::forall(*it, m);
        return {std::move(us), m};
    }
    case K::Exists: {
        Var z = a.var();
        Var set{fr.fresh(set_name(z.name)), Type::star(z.type)};
        HRResult b = translate(a.body(), fr);
        std::vector<Var> evars{set};
        evars.insert(evars.end(), b.evars.begin(), b.evars.end());
        return {std::move(evars), Formula::bexists(z, Term::var(set), b.matrix)};
    }
    case K::Forall: {
        Var z = a.var();
        HRResult b = translate(a.body(), fr);
        std::vector<Var> evars;
        Formula body = b.matrix;
        for (auto& x : b.evars) {
            Var big{x.name, Type::arrow(z.type, x.type)};
            body = subst_formula(body, x, Term::app(Term::var(big), Term::var(z)));
            evars.push_back(big);
        }
        return {std::move(evars), Formula::forall(z, body)};
    }
    case K::BForall:
    case K::BExists: {
        HRResult b = translate(a.body(), fr);
        Formula m = a.kind() == K::BForall ? Formula::bforall(a.var(), a.bound(), b.matrix)
                                            : Formula::bexists(a.var(), a.bound(), b.matrix);
        return {std::move(b.evars), m};
    }
    }
    throw InternalError("unreachable");
}

} // namespace

HRResult hr_translate(const Formula& a, Freshener& fr) {
    fr.reserve(all_names(a));
    return translate(a, fr);
}

HRResult hr_translate(const Formula& a, std::uint64_t seed) {
    Freshener fr(seed);
    return hr_translate(a, fr);
}

std::vector<Type> hr_types(const Formula& a) { return types_of(hr_translate(a).evars); }

Formula hr_matrix_instantiate(const HRResult& h, std::span<const Term> witnesses) {
    if (witnesses.size() != h.evars.size())
        throw TypeError("expected " + std::to_string(h.evars.size()) + " witnesses, got " +
                        std::to_string(witnesses.size()));
    Formula m = h.matrix;
    for (std::size_t i = 0; i < witnesses.size(); ++i) m = subst_formula(m, h.evars[i], witnesses[i]);
    return m;
}

std::string to_string(const HRResult& h) {
    std::string out = "evars: (";
    for (std::size_t i = 0; i < h.evars.size(); ++i) {
        if (i) out += ", ";
        out += h.evars[i].name + ":" + to_string(h.evars[i].type);
    }
    out += "); matrix: " + to_string(h.matrix);
    return out;
}

} // namespace hmr
