#pragma once

#include "jade/checklist.hpp"
#include "jade/credibility.hpp"
#include "jade/errors.hpp"
#include "jade/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jade {

/// One judged checklist item. `raw_score` is the judge's answer in
/// {0, 0.5, 1}; `gated_score` is 0 whenever a dependency failed
/// verification, otherwise it equals the raw score.
struct ItemJudgment {
    int item_id = 0;
    double raw_score = 0.0;
    double gated_score = 0.0;
    bool gated = false;
    std::string rationale;
    /// Claim ids whose verdicts were shown to the judge.
    std::vector<int> conditioned_on;
};

/// Evidence-dependency gating: the item scores zero iff any claim it
/// depends on verified below `tau`. Pure and idempotent.
inline ItemJudgment gate(const ItemJudgment& judgment, const ChecklistItem& item,
                         const std::vector<VerifiedClaim>& claims, double tau) {
    ItemJudgment out = judgment;
    out.gated = false;
    out.gated_score = out.raw_score;
    if (!item.depends_on) return out;

    for (int dep : *item.depends_on) {
        const VerifiedClaim* found = nullptr;
        for (const auto& claim : claims) {
            if (claim.claim.claim_id == dep) {
                found = &claim;
                break;
            }
        }
        if (!found) throw DanglingDependency(item.item_id, dep);
        if (found->v_score < tau) {
            out.gated = true;
            out.gated_score = 0.0;
        }
    }
    return out;
}

/// Weight-aware normalization over the union of judged items:
/// sum(w_i * gated_i) / sum(|w_i|), clamped to [0,1]. Judgments and items
/// must be aligned element-wise by item_id.
inline double reasoning_score(const std::vector<ItemJudgment>& judgments,
                              const std::vector<ChecklistItem>& items) {
    if (judgments.size() != items.size()) {
        throw std::invalid_argument("reasoning_score: judgments and items differ in length");
    }
    double weighted = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (judgments[i].item_id != items[i].item_id) {
            throw std::invalid_argument("reasoning_score: judgment/item id mismatch at position " +
                                        std::to_string(i));
        }
        weighted += items[i].weight * judgments[i].gated_score;
        total += std::abs(items[i].weight);
    }
    if (total == 0.0) throw EmptyChecklist();
    return std::clamp(weighted / total, 0.0, 1.0);
}

/// Same fold without clamping; used by the bound property tests.
inline double reasoning_score_unclamped(const std::vector<ItemJudgment>& judgments,
                                        const std::vector<ChecklistItem>& items) {
    double weighted = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        weighted += items[i].weight * judgments[i].gated_score;
        total += std::abs(items[i].weight);
    }
    if (total == 0.0) throw EmptyChecklist();
    return weighted / total;
}

struct EvidenceScore {
    double value = 1.0;
    /// Set when the report asserted nothing verifiable; the score is then
    /// vacuously 1 and flagged rather than punitive.
    bool no_evidence = false;
};

/// Claim-weighted mean of verification scores:
/// sum(w_c * V(c)) / sum(w_c). Unfavorable evidence lowers V(c) through
/// the verdict mapping, so it lowers the aggregate here.
inline EvidenceScore evidence_score(const std::vector<VerifiedClaim>& claims) {
    if (claims.empty()) return {1.0, true};
    double weighted = 0.0;
    double total = 0.0;
    for (const auto& claim : claims) {
        weighted += claim.claim.weight * claim.v_score;
        total += claim.claim.weight;
    }
    return {weighted / total, false};
}

struct FinalScores {
    double s_final = 0.0;
    double u_density = 0.0;
};

/// s_final = s_reason * s_evid; density U = s_final / ln(tokens + 1),
/// defined as 0 for an empty report.
inline FinalScores final_scores(double s_reason, double s_evid, std::int64_t token_count) {
    if (token_count < 0) throw std::invalid_argument("final_scores: negative token count");
    FinalScores out;
    out.s_final = s_reason * s_evid;
    out.u_density =
        token_count == 0 ? 0.0 : out.s_final / std::log(static_cast<double>(token_count) + 1.0);
    return out;
}

/// Default tokenizer: maximal non-whitespace runs.
inline std::int64_t count_tokens(std::string_view report) {
    std::int64_t count = 0;
    bool in_token = false;
    for (unsigned char c : report) {
        if (std::isspace(c)) {
            in_token = false;
        } else if (!in_token) {
            in_token = true;
            ++count;
        }
    }
    return count;
}

using Tokenizer = std::function<std::int64_t(std::string_view)>;

} // namespace jade
