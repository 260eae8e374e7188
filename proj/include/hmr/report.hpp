#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hmr/extract.hpp"
#include "hmr/verify.hpp"

namespace hmr {

/// Closed terms for the context variables plus relation tables.
struct Bindings {
    std::vector<std::pair<std::string, Term>> values;
    Model model;

    const Term* find(const std::string& name) const;
};

/// `x := term;` and `table R = {(t, ...), ...};` items.
void parse_bindings(std::string_view text, const Signature& sig, Bindings& into);
/// A single `name=term` command-line binding.
void parse_binding_arg(std::string_view arg, const Signature& sig, Bindings& into);

/// Values for every context variable, in context order. Throws Error when one
/// is missing or has the wrong type.
std::vector<Term> context_values(const Context& ctx, const Bindings& b);

/// Machine-readable extraction report. Witness lists are included for
/// star-typed realizers when the context is empty or fully bound.
std::string report_json(const ProofScript& p, const RealizerBundle& bundle, const Bindings& b);
/// Plain-text summary of the same report.
std::string report_text(const ProofScript& p, const RealizerBundle& bundle, const Bindings& b);

/// What `verify` needs back from a report: the signature, context, goal
/// formula (the final line) and its realizers.
struct LoadedReport {
    Signature sig;
    Context ctx;
    int goal_line = 0;
    Formula goal = Formula::bot();
    std::vector<Term> realizers;
    std::vector<std::pair<int, std::string>> lines; // number, formula text
};

LoadedReport load_report(std::string_view json_text);

} // namespace hmr
