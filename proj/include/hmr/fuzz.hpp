#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hmr {

struct FuzzOptions {
    std::uint64_t seed = 1;
    std::size_t cases = 500;
    std::size_t budget = 100'000; // per normalization
    int max_size = 60;
    int max_depth = 4;
};

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::size_t max_steps = 0;
    double seconds = 0;
    std::string first_failure;
    std::string detail; // extra counts worth printing

    bool ok() const { return failures == 0 && cases > 0; }
};

/// Random closed terms normalize within the budget.
PropertyResult fuzz_normalization(const FuzzOptions& o);
/// Leftmost-outermost and rightmost-innermost normal forms coincide.
PropertyResult fuzz_confluence(const FuzzOptions& o);
/// Normal closed star terms are set-like with surface elements, normal closed
/// N terms are numerals. `cases` samples of each kind.
PropertyResult fuzz_normal_shapes(const FuzzOptions& o);
/// normalize((lambda x.t) s) == normalize(t[s/x]).
PropertyResult fuzz_bracket(const FuzzOptions& o);
/// HR invariants: end-star evars, ex-free matrix, ex-free fixpoint, free
/// variables preserved.
PropertyResult fuzz_hr(const FuzzOptions& o);
/// Monotonicity of A_HR for N*-typed evars.
PropertyResult fuzz_monotonicity(const FuzzOptions& o);
/// print then parse is the identity on random terms and formulas.
PropertyResult fuzz_roundtrip(const FuzzOptions& o);

std::vector<PropertyResult> fuzz_all(const FuzzOptions& o);

std::string summary_line(const PropertyResult& r);

} // namespace hmr
