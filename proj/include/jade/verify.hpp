#pragma once

#include "jade/backend.hpp"
#include "jade/checklist.hpp"
#include "jade/prompts.hpp"
#include "jade/tools.hpp"
#include "jade/verdict.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jade {

/// A claim together with its tool-grounded verdict and mapped score.
struct VerifiedClaim {
    Claim claim;
    VerificationVerdict verdict;
    double v_score = 0.0;
    std::vector<ToolCallRecord> tool_trace;
    bool budget_exhausted = false;
};

struct VerifyOptions {
    int tool_budget = 5;
    std::string current_date = "1970-01-01";
};

namespace detail {

/// Budget exhaustion floors the claim: the claim "cannot be verified",
/// which the wire format expresses as a full-confidence "no".
inline VerifiedClaim budget_floor(const Claim& claim, const BudgetedTools& tools, int budget) {
    VerifiedClaim out;
    out.claim = claim;
    out.verdict.conclusion = VerificationVerdict::Conclusion::no;
    out.verdict.confidence = 100;
    out.verdict.reason.summary = "Tool budget of " + std::to_string(budget) +
                                 " calls exceeded; the claim could not be verified.";
    out.v_score = map_verdict(out.verdict);
    out.tool_trace = tools.trace();
    out.budget_exhausted = true;
    return out;
}

struct AgentAction {
    ToolKind tool;
    std::string input;
};

/// A response is either a tool request, a final verdict, or garbage
/// (SchemaError -> repair path in the caller).
inline std::optional<AgentAction> parse_action(const nlohmann::json& doc,
                                               const std::string& raw) {
    if (!doc.is_object() || !doc.contains("action")) return std::nullopt;
    const std::string action = doc["action"].get<std::string>();
    if (!doc.contains("input") || !doc["input"].is_string()) {
        throw SchemaError("action request missing string 'input'", raw);
    }
    if (action == "search") return AgentAction{ToolKind::search, doc["input"].get<std::string>()};
    if (action == "url_context") {
        return AgentAction{ToolKind::url_context, doc["input"].get<std::string>()};
    }
    throw SchemaError("unknown action '" + action + "'", raw);
}

} // namespace detail

/// Grounds one evidence claim. The agent may request search/url_context
/// calls (bounded by the tool budget) before emitting its verdict JSON.
/// When the claim cites a source URL, that URL is fetched first, so the
/// trace always starts with url_context for sourced claims.
inline VerifiedClaim verify_claim(const Claim& claim, ToolSuite& tool_suite, LLMBackend& backend,
                                  const VerifyOptions& options = {}) {
    if (claim.kind != ItemType::evidence) {
        throw std::invalid_argument("verify_claim: only evidence claims are verification targets");
    }

    BudgetedTools tools(tool_suite, options.tool_budget);

    std::string source_context;
    if (claim.source_url) {
        std::string content;
        try {
            content = tools.url_context(*claim.source_url);
        } catch (const ToolError& e) {
            content = std::string("ERROR: ") + e.kind() + " (" + e.what() + ")";
        } catch (const ToolBudgetExceeded&) {
            return detail::budget_floor(claim, tools, options.tool_budget);
        }
        source_context = "## Source URL\n" + *claim.source_url + "\n\n## Source URL Content\n" +
                         content + "\n";
    }

    std::string prompt =
        prompts::render_verification_prompt(claim, options.current_date, source_context);

    bool repaired = false;
    while (true) {
        const std::string response = backend.complete(prompt);

        nlohmann::json doc;
        std::optional<detail::AgentAction> action;
        try {
            doc = extract_json(response);
            action = detail::parse_action(doc, response);
        } catch (const SchemaError& e) {
            if (repaired) throw;
            repaired = true;
            prompt = prompts::render_repair_prompt(prompt, e.violation());
            continue;
        }

        if (action) {
            std::string observation;
            try {
                observation = action->tool == ToolKind::search ? tools.search(action->input)
                                                               : tools.url_context(action->input);
            } catch (const ToolBudgetExceeded&) {
                return detail::budget_floor(claim, tools, options.tool_budget);
            } catch (const ToolError& e) {
                observation = std::string("ERROR: ") + e.kind() + " (" + e.what() + ")";
            }
            prompt += "\n\n## Tool Result (" + std::string(to_string(action->tool)) + ": " +
                      action->input + ")\n" + observation + "\n";
            continue;
        }

        VerificationVerdict verdict;
        try {
            verdict = parse_verdict(response);
        } catch (const SchemaError& e) {
            if (repaired) throw;
            repaired = true;
            prompt = prompts::render_repair_prompt(prompt, e.violation());
            continue;
        }

        VerifiedClaim out;
        out.claim = claim;
        out.verdict = verdict;
        out.v_score = map_verdict(verdict);
        out.tool_trace = tools.trace();
        return out;
    }
}

} // namespace jade
