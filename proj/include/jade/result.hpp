#pragma once

#include "jade/checklist.hpp"
#include "jade/credibility.hpp"
#include "jade/scoring.hpp"
#include "jade/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace jade {

/// The complete outcome of evaluating one report against one query.
/// item_judgments lists query-checklist judgments first, then report
/// reasoning judgments; query_item_count marks the split.
struct EvaluationResult {
    int query_id = 0;
    std::string run_id;
    std::vector<ItemJudgment> item_judgments;
    std::size_t query_item_count = 0;
    std::vector<VerifiedClaim> verified_claims;
    double s_reason = 0.0;
    double s_evid = 1.0;
    bool no_evidence = false;
    double s_final = 0.0;
    double u_density = 0.0;
    SourceCredibility credibility;
    std::int64_t token_count = 0;
};

inline nlohmann::ordered_json judgment_to_json(const ItemJudgment& judgment) {
    nlohmann::ordered_json j;
    j["item_id"] = judgment.item_id;
    j["raw_score"] = judgment.raw_score;
    j["gated_score"] = judgment.gated_score;
    j["gated"] = judgment.gated;
    j["rationale"] = judgment.rationale;
    j["conditioned_on"] = judgment.conditioned_on;
    return j;
}

inline nlohmann::ordered_json verified_claim_to_json(const VerifiedClaim& claim) {
    nlohmann::ordered_json j;
    j["claim_id"] = claim.claim.claim_id;
    j["kind"] = to_string(claim.claim.kind);
    j["text"] = claim.claim.text;
    if (claim.claim.source_url) j["source_url"] = *claim.claim.source_url;
    j["weight"] = number_as_json(claim.claim.weight);
    j["verdict"] = verdict_to_json(claim.verdict);
    j["v_score"] = claim.v_score;
    j["budget_exhausted"] = claim.budget_exhausted;
    nlohmann::ordered_json trace = nlohmann::ordered_json::array();
    for (const auto& call : claim.tool_trace) {
        nlohmann::ordered_json t;
        t["tool"] = to_string(call.tool);
        t["input"] = call.input;
        t["output_digest"] = call.output_digest;
        if (!call.ok) t["error"] = true;
        trace.push_back(std::move(t));
    }
    j["tool_trace"] = std::move(trace);
    return j;
}

inline nlohmann::ordered_json credibility_to_json(const SourceCredibility& credibility) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json per_url = nlohmann::ordered_json::array();
    for (const auto& rating : credibility.per_url) {
        per_url.push_back({{"url", rating.url},
                           {"tier", to_string(rating.tier)},
                           {"s_tier", rating.s_tier}});
    }
    j["per_url"] = std::move(per_url);
    j["q_score"] = credibility.q_score;
    j["grade"] = std::string(1, credibility.grade);
    j["recommendations"] = credibility.recommendations;
    return j;
}

inline nlohmann::ordered_json result_to_json(const EvaluationResult& result) {
    nlohmann::ordered_json j;
    j["query_id"] = result.query_id;
    j["run_id"] = result.run_id;
    nlohmann::ordered_json judgments = nlohmann::ordered_json::array();
    for (const auto& judgment : result.item_judgments) {
        judgments.push_back(judgment_to_json(judgment));
    }
    j["item_judgments"] = std::move(judgments);
    j["query_item_count"] = result.query_item_count;
    nlohmann::ordered_json claims = nlohmann::ordered_json::array();
    for (const auto& claim : result.verified_claims) {
        claims.push_back(verified_claim_to_json(claim));
    }
    j["verified_claims"] = std::move(claims);
    j["s_reason"] = result.s_reason;
    j["s_evid"] = result.s_evid;
    j["no_evidence"] = result.no_evidence;
    j["s_final"] = result.s_final;
    j["u_density"] = result.u_density;
    j["credibility"] = credibility_to_json(result.credibility);
    j["token_count"] = result.token_count;
    return j;
}

} // namespace jade
