#pragma once

#include "jade/backend.hpp"
#include "jade/checklist.hpp"
#include "jade/prompts.hpp"
#include "jade/scoring.hpp"
#include "jade/verify.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jade {

namespace detail {

inline std::string verdict_digest_lines(const ChecklistItem& item,
                                        const std::vector<VerifiedClaim>& claims,
                                        std::vector<int>& conditioned_on) {
    if (!item.depends_on || item.depends_on->empty()) return {};
    std::ostringstream out;
    for (int dep : *item.depends_on) {
        const VerifiedClaim* found = nullptr;
        for (const auto& claim : claims) {
            if (claim.claim.claim_id == dep) {
                found = &claim;
                break;
            }
        }
        if (!found) throw DanglingDependency(item.item_id, dep);
        conditioned_on.push_back(dep);
        const auto& v = found->verdict;
        out << "- claim " << dep << ": \"" << found->claim.text << "\" -> conclusion="
            << (v.conclusion == VerificationVerdict::Conclusion::yes ? "yes" : "no")
            << ", confidence=" << v.confidence << ", v_score=" << found->v_score;
        if (!v.reason.summary.empty()) out << "; " << v.reason.summary;
        out << "\n";
    }
    return out.str();
}

inline double parse_judge_score(const std::string& response) {
    const nlohmann::json doc = extract_json(response);
    if (!doc.is_object() || !doc.contains("score") || !doc["score"].is_number()) {
        throw SchemaError("judge response must be an object with a numeric 'score'", response);
    }
    const double score = doc["score"].get<double>();
    if (score != 0.0 && score != 0.5 && score != 1.0) {
        throw SchemaError("judge score must be one of 0, 0.5, 1 (got " + doc["score"].dump() + ")",
                          response);
    }
    return score;
}

} // namespace detail

/// Judges one checklist item in {0, 0.5, 1}. When the item depends on
/// claims, their verdicts are embedded in the prompt and recorded in
/// conditioned_on. Evidence items are verified, not judged.
inline ItemJudgment judge_item(const std::string& query, const std::string& report,
                               const ChecklistItem& item,
                               const std::vector<VerifiedClaim>& context, LLMBackend& backend) {
    if (item.item_type == ItemType::evidence && item.tier == Tier::ReportSpecific) {
        throw std::invalid_argument("judge_item: report evidence items are verification targets");
    }

    ItemJudgment judgment;
    judgment.item_id = item.item_id;

    const std::string verification_context =
        detail::verdict_digest_lines(item, context, judgment.conditioned_on);
    std::string prompt = prompts::render_judge_prompt(query, report, item, verification_context);

    std::string response = backend.complete(prompt);
    double score;
    std::string rationale;
    try {
        score = detail::parse_judge_score(response);
    } catch (const SchemaError& first) {
        response = backend.complete(prompts::render_repair_prompt(prompt, first.violation()));
        score = detail::parse_judge_score(response); // final
    }
    try {
        const auto doc = extract_json(response);
        if (doc.contains("rationale") && doc["rationale"].is_string()) {
            rationale = doc["rationale"].get<std::string>();
        }
    } catch (const SchemaError&) {
        // score already validated; rationale stays empty
    }

    judgment.raw_score = score;
    judgment.gated_score = score;
    judgment.gated = false;
    judgment.rationale = std::move(rationale);
    return judgment;
}

} // namespace jade
