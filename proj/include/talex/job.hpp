#ifndef TALEX_JOB_HPP
#define TALEX_JOB_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "talex/analysis.hpp"
#include "talex/twisted.hpp"

namespace talex {

using OrderedJson = nlohmann::ordered_json;

/// Report kinds a job may request.
enum class ReportKind { Modules, Polynomials, Wada, Divisibility, Splitting, Torsion };

/// A parsed and validated job file: field, presentation (builder
/// invocation or inline grammar), rank, epsilon, rho, requested
/// reports and optional component weights for the divisibility bound.
struct Job {
    FieldDescriptor field = FieldDescriptor::rationals();
    std::string presentation_source;  // builder string or inline grammar
    Presentation presentation;
    size_t rank = 1;
    std::vector<long> epsilon;
    std::vector<std::vector<std::vector<std::string>>> rho_text;  // per generator, row-major
    std::vector<ReportKind> reports;
    std::vector<ComponentWeight> weights;  // may be synthesized from epsilon
    bool weights_explicit = false;

    /// Validates epsilon/rho against the presentation; throws
    /// InvalidSetup and friends.
    TwistedSetup make_setup() const;
};

/// Parses a job JSON document. Throws SyntaxError for malformed JSON
/// or grammar, Error subclasses for semantic problems.
Job parse_job(const std::string& json_text);

/// Runs all requested reports; the result serializes deterministically
/// (stable key order, canonical polynomial printing).
OrderedJson run_job(const Job& job);

/// Renders a result document as indented JSON; byte-stable for equal
/// inputs.
std::string render_json(const OrderedJson& doc);

/// Renders a result document as human-readable text.
std::string render_text(const OrderedJson& doc);

/// Ready-to-edit job for a named builder ("hopf", "a_singularity",
/// "free") with a trivial rank-1 representation and linking-number
/// style epsilon. Throws UnknownBuilder.
OrderedJson scaffold_job(const std::string& builder, const std::map<std::string, long>& params);

/// Theorem-as-test summary: the torsion certificate always, plus the
/// divisibility and splitting checks when the presentation is a Hopf
/// builder and epsilon fits the linking-number pattern.
struct VerifyOutcome {
    OrderedJson document;
    bool all_passed;
};
VerifyOutcome verify_job(const Job& job);

}  // namespace talex

#endif
