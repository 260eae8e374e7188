#pragma once

#include <string>
#include <vector>

#include "hmr/hr.hpp"
#include "hmr/proof.hpp"
#include "hmr/rewrite.hpp"

namespace hmr {

/// Realizers of one proof line. Each term is closed and has type
/// (context types) -> (evar type); applied to the context tuple it witnesses
/// the line's HR matrix.
struct LineRealizers {
    int number = 0;
    HRResult hr;
    std::vector<Term> terms;
    std::string provenance; // "axiom NAME", "rule NAME" or "assumption NAME"
};

struct RealizerBundle {
    Context ctx;
    std::vector<LineRealizers> lines;

    const LineRealizers& final_line() const { return lines.back(); }
    const LineRealizers* line(int number) const;
};

/// Realizers for an axiom instance, closed over `ctx`. Ex-free instances get
/// none.
std::vector<Term> extract_axiom(const std::string& name, const Params& params, const Formula& instance,
                                const Context& ctx, const Signature& sig);

/// Realizers for a rule conclusion from the premises' realizers.
std::vector<Term> combine_rule(RuleKind rule, const Formula& conclusion, const std::vector<Formula>& premises,
                               const std::vector<std::vector<Term>>& premise_terms, const Context& ctx,
                               const Signature& sig);

/// Checks the proof and folds the case table over it. Throws Error listing
/// the first checker diagnostics if the proof does not check.
RealizerBundle extract(const ProofScript& p);

/// The type a realizer for an evar of type `t` must have under `ctx`.
Type realizer_type(const Context& ctx, const Type& t);

} // namespace hmr
