#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hmr/formula.hpp"
#include "hmr/term.hpp"

namespace hmr::gen {

/// Random generators over the arithmetic signature, deterministic per seed.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }
    bool coin(double p);
    int below(int n);

    /// Types of depth at most `depth` over N.
    Type type(int depth);

    /// A closed term of type t with roughly `size` leaves. Built to contain
    /// redexes: combinators applied to extra arguments, unions under BIGCUP,
    /// recursors on small numerals.
    Term closed(const Type& t, int size);

    /// Like `closed`, but variables from `vars` may appear.
    Term open(const Type& t, int size, const std::vector<Var>& vars);

    /// A closed term with size at most `max_size` leaves and type depth at
    /// most `max_depth`.
    Term closed_term(int max_size, int max_depth);

    /// A closed N* term that is a union of singletons of small numerals.
    Term numeral_set(int max_elems, int max_value);

    /// A well-formed closed formula of the given connective depth.
    Formula formula(int depth);

    /// A closed formula whose HR evars all have type N* and whose matrix, once
    /// evars are replaced by closed sets, lies in the decidable fragment.
    Formula monotone_formula(int depth);

    /// Atomic formula over the N-typed variables of `scope`.
    Formula atom(const std::vector<Var>& scope);
    /// A variable name not produced before by this generator.
    Var fresh(const Type& t);

private:
    Term build(const Type& t, int size, const std::vector<Var>& vars);
    Term leaf(const Type& t, const std::vector<Var>& vars);
    Formula formula_in(int depth, std::vector<Var>& scope, bool allow_exists);
    Term ground_term(const std::vector<Var>& scope);

    std::mt19937_64 rng_;
    int names_ = 0;
};

} // namespace hmr::gen
