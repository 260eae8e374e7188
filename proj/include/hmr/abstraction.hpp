#pragma once

#include <span>
#include <string>
#include <vector>

#include "hmr/rewrite.hpp"
#include "hmr/term.hpp"

namespace hmr {

/// The identity combinator SIG PI PI at type t -> t.
Term identity_combinator(const Type& t);

/// Bracket abstraction lambda x.t with the three-clause translation:
///   [x]x = SIG PI PI,  [x]t = PI t (x not in t),  [x](f a) = SIG [x]f [x]a.
Term bracket(const Var& x, const Term& t);

/// lambda xs.t, abstracting the last variable first.
Term bracket_all(std::span<const Var> xs, const Term& t);

/// Componentwise lambda xs.ts.
std::vector<Term> bracket_tuple(std::span<const Var> xs, std::span<const Term> ts);

/// a [_]_sigma b = lambda x1..xn. CUP (a x1..xn) (b x1..xn), for end-star sigma.
Term sqcup(const Term& a, const Term& b, const Type& sigma);

/// Big union: lambda x1..xn. BIGCUP F (lambda w. f w x1..xn), for F : rho*,
/// f : rho -> sigma and sigma end-star. At n = 0 this is BIGCUP F f.
Term big_sqcup(const Term& family, const Term& f, const Type& sigma);

struct SubsetVerdict {
    bool holds = false;
    /// Set when sigma is a higher end-star type and only the probe
    /// arguments were checked.
    bool probe_limited = false;
};

/// a [=_sigma b. Exact at sigma = tau*; at higher end-star types the
/// conjunction over the supplied argument tuples only.
SubsetVerdict subseteq_check(const Term& a, const Term& b, const Type& sigma,
                             std::span<const std::vector<Term>> probe, std::size_t budget = kDefaultBudget);

/// A variable name of the form base, base', base'', ... not in `taken`.
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken);

} // namespace hmr
