#pragma once

#include "jade/backend.hpp"
#include "jade/checklist.hpp"
#include "jade/prompts.hpp"
#include "jade/skills.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace jade {

/// Audit-trail entry for one generation call. prompt_hash is recomputable
/// from the rendered prompt inputs.
struct GenerationRecord {
    std::string prompt_hash;
    std::string raw_response;
    std::string backend_id;
    std::int64_t timestamp = 0;
};

using Clock = std::function<std::int64_t()>;

inline Clock system_clock_seconds() {
    return [] {
        return static_cast<std::int64_t>(
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count());
    };
}

inline Clock fixed_clock(std::int64_t at) {
    return [at] { return at; };
}

struct GenOptions {
    WeightPolicy weights;
    ChecklistBounds bounds;
    Clock clock = fixed_clock(0);
};

namespace detail {

/// Runs prompt -> complete -> parse with one structured repair re-prompt
/// on schema violations, then fails hard.
template <typename Parse>
auto generate_with_repair(LLMBackend& backend, const std::string& prompt, Parse parse,
                          GenerationRecord& record, const GenOptions& options) {
    record.prompt_hash = prompts::prompt_hash(prompt);
    record.backend_id = backend.id();
    record.timestamp = options.clock();

    std::string response = backend.complete(prompt);
    try {
        auto parsed = parse(response);
        record.raw_response = response;
        return parsed;
    } catch (const SchemaError& first) {
        const std::string repair = prompts::render_repair_prompt(prompt, first.violation());
        response = backend.complete(repair);
        auto parsed = parse(response); // SchemaError here is final
        record.raw_response = response;
        return parsed;
    }
}

} // namespace detail

struct QueryChecklistResult {
    Checklist checklist;
    GenerationRecord record;
};

/// Layer 1: renders the query prompt against the composed rubric, invokes
/// the backend, validates the returned checklist. The query checklist is a
/// pure function of (query, rubric) under a deterministic backend.
inline QueryChecklistResult generate_query_checklist(const std::string& query,
                                                     const ComposedRubric& rubric,
                                                     LLMBackend& backend,
                                                     const GenOptions& options = {}) {
    const std::string prompt = prompts::render_query_prompt(query, rubric);
    QueryChecklistResult result;
    result.checklist = detail::generate_with_repair(
        backend, prompt,
        [&](const std::string& response) {
            return parse_query_checklist(response, options.weights, options.bounds);
        },
        result.record, options);
    return result;
}

struct ReportChecklistResult {
    Checklist checklist;
    std::vector<Claim> claims;
    GenerationRecord record;
};

/// Layer 2: report-conditioned checklist plus the claim set mirrored 1:1
/// from its items (claim_id = item_id).
inline ReportChecklistResult generate_report_checklist(const std::string& query,
                                                       const std::string& report,
                                                       LLMBackend& backend,
                                                       const GenOptions& options = {}) {
    if (report.empty()) throw EmptyReport();
    const std::string prompt = prompts::render_report_prompt(query, report);
    ReportChecklistResult result;
    result.checklist = detail::generate_with_repair(
        backend, prompt,
        [&](const std::string& response) {
            return parse_report_checklist(response, options.weights, options.bounds);
        },
        result.record, options);
    result.claims = claims_from_report_checklist(result.checklist);
    return result;
}

} // namespace jade
