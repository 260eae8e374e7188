#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hmr/formula.hpp"
#include "hmr/term.hpp"

namespace hmr {

enum class ParamKind { Formula, Term, Var };

struct AxiomSchema {
    std::string name;
    std::vector<std::pair<std::string, ParamKind>> params;
    bool arithmetic = false; // only in arithmetic mode
    std::string shape;       // human-readable schema
};

/// All axiom schemas the checker knows, in a fixed order.
const std::vector<AxiomSchema>& axiom_catalogue();
const AxiomSchema* find_axiom(std::string_view name);

enum class RuleKind { MP, SYL, OR_MONO, EXPORT, IMPORT, ALL_INTRO, EX_ELIM };
const char* rule_keyword(RuleKind r);
std::optional<RuleKind> find_rule(std::string_view name);
/// Number of premises each rule takes.
std::size_t rule_arity(RuleKind r);

using ParamValue = std::variant<Formula, Term, Var>;

struct Params {
    std::vector<std::pair<std::string, ParamValue>> entries; // as written

    const ParamValue* find(const std::string& key) const;
    const Formula& formula(const std::string& key) const;
    const Term& term(const std::string& key) const;
    const Var& var(const std::string& key) const;
};

struct Justification {
    enum class Kind { Axiom, Rule, Assumption };
    Kind kind = Kind::Axiom;
    std::string name; // schema, rule keyword or assumption name
    Params params;
    std::vector<int> premises;
};

struct ProofLine {
    int number = 0;
    Formula formula = Formula::bot();
    Justification just;
    int source_line = 0;
};

struct Assumption {
    std::string name;
    Formula formula;
};

struct ProofScript {
    Signature sig;
    Context ctx;
    std::vector<Assumption> assumptions;
    std::vector<ProofLine> lines;

    const ProofLine* line(int number) const;
    const Assumption* assumption(const std::string& name) const;
};

/// Parses a proof file: optional signature header and context, then
/// `assume name : A;` items and numbered lines
/// `n) A BY axiom NAME {k := v; ...}`, `n) A BY rule NAME from i, j`,
/// `n) A BY assumption name`.
ProofScript parse_proof(std::string_view text, Signature base = Signature::arithmetic());

/// Prints a script that parses back to an equal one.
std::string to_string(const ProofScript& p);
std::string to_string(const Justification& j);
std::string to_string(const ParamValue& v);

/// The formula an axiom instance stands for. For EQ_SUBST, whose result is
/// not determined by the parameters, `line` supplies the candidate and is
/// checked. Throws Error with a diagnostic when the parameters do not fit.
Formula axiom_instance(const std::string& name, const Params& params, const Signature& sig,
                       const std::optional<Formula>& line = std::nullopt);

struct LineDiagnostic {
    int line = 0; // proof line number; 0 for header problems
    std::string message;
};

struct CheckResult {
    std::vector<LineDiagnostic> errors;
    bool ok() const { return errors.empty(); }
};

/// Validates every line: well-formedness in the context, schema shape for
/// axioms, premise shapes and eigenvariable conditions for rules, and
/// ex-freeness of assumptions and of the IP premise.
CheckResult check_proof(const ProofScript& p);

} // namespace hmr
