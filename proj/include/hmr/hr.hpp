#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hmr/formula.hpp"

namespace hmr {

/// A^HR = ex evars . matrix
struct HRResult {
    std::vector<Var> evars;
    Formula matrix = Formula::bot();
};

/// Hands out names not yet reserved. A requested base name is returned as is
/// when free, otherwise base#k with k drawn from a counter starting at the seed.
class Freshener {
public:
    explicit Freshener(std::uint64_t seed = 0) : counter_(seed) {}

    void reserve(const std::string& name) { taken_.insert(name); }
    void reserve(const std::set<std::string>& names) { taken_.insert(names.begin(), names.end()); }
    bool is_taken(const std::string& name) const { return taken_.count(name) != 0; }
    std::string fresh(const std::string& base);

private:
    std::uint64_t counter_;
    std::set<std::string> taken_;
};

/// The herbrandized modified realizability translation. Reserves every name of
/// `a` in `fr` before allocating evars.
HRResult hr_translate(const Formula& a, Freshener& fr);
HRResult hr_translate(const Formula& a, std::uint64_t seed = 0);

/// Only the evar types, which do not depend on naming.
std::vector<Type> hr_types(const Formula& a);

/// Substitutes the witnesses for the evars, positionally.
Formula hr_matrix_instantiate(const HRResult& h, std::span<const Term> witnesses);

/// "evars: (X:T, ...); matrix: ..."
std::string to_string(const HRResult& h);

} // namespace hmr
