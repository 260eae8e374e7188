#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hmr/formula.hpp"
#include "hmr/hr.hpp"
#include "hmr/rewrite.hpp"

namespace hmr {

enum class Truth { True, False, Undecidable };

const char* truth_name(Truth t);

struct EvalVerdict {
    Truth value = Truth::Undecidable;
    std::string reason; // set for Undecidable

    static EvalVerdict yes() { return {Truth::True, {}}; }
    static EvalVerdict no() { return {Truth::False, {}}; }
    static EvalVerdict undecidable(std::string why) { return {Truth::Undecidable, std::move(why)}; }

    bool is_true() const { return value == Truth::True; }
    bool is_false() const { return value == Truth::False; }
};

/// Finite truth tables for relation symbols. A tuple holds iff it is listed;
/// relations without a table are undecidable.
class Model {
public:
    void declare(const std::string& rel) { tables_[rel]; }
    /// Rows are stored in normal form.
    void add_row(const std::string& rel, const std::vector<Term>& row);
    bool has_table(const std::string& rel) const { return tables_.count(rel) != 0; }
    std::optional<bool> holds(const std::string& rel, const std::vector<Term>& normal_args) const;
    const std::map<std::string, std::vector<std::vector<Term>>>& tables() const { return tables_; }

private:
    std::map<std::string, std::vector<std::vector<Term>>> tables_;
};

/// Normalizes and decodes a closed N-typed term.
std::uint64_t eval_term_nat(const Term& t, std::size_t budget = kDefaultBudget);

/// Three-valued evaluation of a closed formula. Ground equality compares
/// normal forms, star equality is extensional over enumerations, equality at
/// arrow types is decided only when the normal forms coincide. Unbounded
/// quantifiers are undecidable.
EvalVerdict eval_formula(const Formula& a, const Model& model = {}, std::size_t budget = kDefaultBudget);

/// Evaluates A_HR(values, realizers values): each realizer is applied to the
/// context values, then the context variables are replaced by the values.
EvalVerdict check_realizer(const Formula& a, const Context& ctx, std::span<const Term> values,
                           std::span<const Term> realizers, const Model& model = {},
                           std::size_t budget = kDefaultBudget);

/// Truth of x [= x' & A_HR(x) -> A_HR(x') for closed star-typed witnesses.
/// Throws Error when x [= x' fails, since that is the probe's precondition.
EvalVerdict monotonicity_probe(const HRResult& h, std::span<const Term> x, std::span<const Term> x2,
                               const Model& model = {}, std::size_t budget = kDefaultBudget);

} // namespace hmr
