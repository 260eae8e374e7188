#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hmr/term.hpp"

namespace hmr {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

enum class Rule { Sigma, Pi, BigCupSing, BigCupCup, RecZero, RecSuc };

const char* rule_name(Rule r);

/// One contraction. `position` is the path from the root: 'f' descends into
/// the function side of an application, 'a' into the argument; "@" prefixes
/// every path so the root is "@".
struct Step {
    std::string position;
    Rule rule;
    Term result;
};

struct ReductionTrace {
    std::optional<Term> start;
    std::vector<Step> steps;
    std::size_t budget_used = 0;

    /// One line per step: `pos rule term`.
    std::string dump() const;
};

/// Contracts `redex` at its root. Precondition: redex.is_redex().
Term contract(const Term& redex, Rule* applied = nullptr);

/// Leftmost-outermost one-step reduction; nullopt iff `t` is normal.
std::optional<Step> step(const Term& t);

/// Canonical normalizer: iterates `step` (leftmost-outermost). Throws
/// BudgetExhausted (with the trace tail) if more than `budget` steps are needed.
Term normalize(const Term& t, std::size_t budget = kDefaultBudget, ReductionTrace* trace = nullptr);

/// Alternate rightmost-innermost normalizer, kept for confluence testing.
/// Adds the number of contractions performed to `*steps` when given.
Term normalize_innermost(const Term& t, std::size_t budget = kDefaultBudget, std::size_t* steps = nullptr);

/// Deduplicated (by syntactic equality) ordered list of terms.
class WitnessSet {
public:
    bool insert(const Term& t);
    bool contains(const Term& t) const;
    const std::vector<Term>& elements() const { return elements_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

private:
    std::vector<Term> elements_;
};

/// SM(t): {q} for (SET q), SM(q) u SM(r) for (CUP q r), empty otherwise.
/// Throws TypeError on non-star terms.
WitnessSet surface_elements(const Term& t);

/// True iff the star structure of `t` is built from SET-applications and CUP
/// only. Inner elements need not be normal.
bool is_set_like(const Term& t);

/// Normalizes a closed star-typed term and returns its (normal) surface
/// elements; nonempty for every closed input.
WitnessSet enumerate_set(const Term& t, std::size_t budget = kDefaultBudget);

/// Normalizes a closed N-typed term and decodes the numeral. nullopt would
/// mean the numeral normal-form property failed.
std::optional<std::uint64_t> as_numeral(const Term& t, std::size_t budget = kDefaultBudget);

/// Budget from HMR_BUDGET if set and valid, else kDefaultBudget.
std::size_t default_budget();

} // namespace hmr
