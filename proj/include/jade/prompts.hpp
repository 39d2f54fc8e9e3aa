#pragma once

#include "jade/checklist.hpp"
#include "jade/digest.hpp"
#include "jade/skills.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace jade::prompts {

inline constexpr const char* kTemplateVersion = "v1";

// -------------------------------------------------------------------------
// Layer 1: query-checklist generation.
// -------------------------------------------------------------------------
inline constexpr const char* kQueryChecklistTemplate =
    R"PROMPT(# TASK
Generate a checklist to evaluate if an AI response adequately answers the user query.
Each criterion must be an atomic Yes/No question (ask ONE thing only).

# QUERY
{query}

# CORE DELIVERABLE (L1 Gate)
{deliverable_check}

# EXPERT CHECKPOINTS
{expert_hints}

# RULES
1. **L1 Gate First**: item_id=0 must check if core deliverable exists
   - Product/supplier queries -> check for links (URLs, ASINs)
   - Data queries -> check for specific data/numbers
   - Analysis queries -> check for conclusions with reasoning

2. **Atomic Questions**: Each criterion = ONE check
   - BAD: "Does it provide links AND analyze trends?"
   - GOOD: "Does it provide product links?"
   - GOOD: "Does it analyze trends?"

3. **Quantity**: Scale with query complexity
   - Simple query (few requirements): 4-6 items
   - Complex query (many L2/L3 checkpoints): 8-15 items
   - Cover each expert checkpoint; Cover the user's requirements; Skip redundant or trivial checks

4. **Critical Flaw**: Only for ACTIVE violations (recommending wrong things)
   - GOOD: "Does it recommend items outside the specified scope?"
   - BAD: "Does it fail to provide X?" (covered by positive check)

5. **Independent Items** (depends_on: null): Always include these at the end
   - **Graceful Degradation**: If core request cannot be fully met, does the response acknowledge limitations and provide alternatives?
   - **Risk Awareness**: For recommendation/decision queries, does the response mention potential risks or uncertainties?

# OUTPUT FORMAT
Each item has: item_id, tier, depends_on, category, description, weight, source_skill

Weights: 15 (L1 core), 10 (L2/L3), 5 (general), -15 (critical flaw)

```json
[
  {
     "item_id": 0, "tier": "L1", "depends_on": null, "category": "Core Deliverable",
     "description": "Does the response provide [SPECIFIC DELIVERABLE]?",
     "weight": 15, "source_skill": "L1"
  },
  ...
]
```
)PROMPT";

// -------------------------------------------------------------------------
// Layer 2: report-checklist generation and claim extraction.
// -------------------------------------------------------------------------
inline constexpr const char* kReportChecklistTemplate =
    R"PROMPT(# TASK
Generate a checklist to verify factual claims and reasoning quality in the AI response.

# QUERY
{query}

# RESPONSE TO EVALUATE
{report_content}

# ITEM TYPES

1. **Evidence** (type: "evidence"): Verifiable facts
   - Factual claims (entity existence, specs, certifications)
   - Quantitative claims (numbers, dates, prices)
   - Source validity (URLs cited in response)

2. **Reasoning** (type: "reasoning"): Judgment quality
   - Is the conclusion supported by stated evidence?
   - Are key assumptions stated?
   - Is the reasoning logically valid?

# RULES
1. Each description must be SELF-CONTAINED (understandable without the response)
   - BAD: "Verify the Enaiter example's price claim"
   - GOOD: "Verify that Enaiter silicone products are priced at $7.50-$9.80/piece"

2. Focus on HIGH-IMPACT claims that affect user decisions

3. Quantity: 4-10 items based on response complexity

4. Reasoning items that rest on factual claims list those item ids in depends_on.
   Evidence items never carry depends_on. When the response cites a URL for a
   claim, repeat it in the item's source_url field.

# OUTPUT FORMAT
```json
[
  {
    "item_id": 0, "type": "evidence", "category": "Factual Claim",
    "description": "Verify that [SPECIFIC CLAIM with full context].",
    "weight": 5
  },
  ...
]
```
)PROMPT";

// -------------------------------------------------------------------------
// Verification agent.
// -------------------------------------------------------------------------
inline constexpr const char* kVerificationTemplate =
    R"PROMPT(You are an expert fact-checker. Your task is to verify the following claim using web search and URL context tools.

## Current Date: {current_date}

## Claim to Verify
{claim}

{source_info}

## Instructions
1. If a source URL is provided, analyze it first using URL context
2. Use web search to find additional evidence if needed
3. Analyze all gathered evidence carefully
4. Provide your final verdict in the EXACT JSON format below

## Tool Access
To call a tool, return only a JSON object of the form
{"action": "search", "input": "<search query>"} or
{"action": "url_context", "input": "<url>"}.
The tool result will be appended to this conversation. When you have enough
evidence, return the final verdict instead.

## IMPORTANT: Handling Equivalent Terms and Partial Matches
When verifying claims, recognize that many terms have **equivalent expressions**. Do NOT require the report/listing to repeat every alias verbatim if the meaning is clearly the same.

1. **Parenthetical equivalence** like "18/8 (304)" or "X (Y equivalent)" means these are **equivalent terms**. Finding EITHER term satisfies the claim.
   - Example: "18/8 stainless steel" = "304 stainless steel" = "SUS304" (same material, different naming conventions)
   - If claim says "18/8 (304) stainless steel" and evidence shows only "18/8 stainless steel", this is still a MATCH.

2. **Slash notations** like "USB-C/Type-C" are interchangeable terms.

3. **Common industry equivalents** you should recognize:
   - 18/8 stainless steel = 304 stainless steel = SUS304
   - Wi-Fi 6 = 802.11ax
   - USB 3.0 = USB 3.1 Gen 1 = USB 3.2 Gen 1
   - 4K = 2160p = UHD

4. **Focus on semantic meaning**: if the evidence confirms the essential claim using an equivalent term, conclude "yes".

## Response Format (MUST be valid JSON)
```json
{
    "conclusion": "yes" or "no",
    "confidence": 0-100,
    "reason": {
        "summary": "Brief summary of your findings",
        "supporting": ["Evidence point 1", "Evidence point 2"],
        "contradicting": ["Contradicting evidence if any"]
    },
    "reference_urls": {
        "supporting": ["url1", "url2"],
        "contradicting": ["url3"]
    }
}
```

## Rules
- "yes" means the claim is accurate/verified
- "no" means the claim is inaccurate, outdated, or cannot be verified
- Confidence should reflect how certain you are (0-100)
- Include ALL relevant URLs you found in reference_urls
- Be thorough but concise in your reasoning
)PROMPT";

// -------------------------------------------------------------------------
// Per-item judge.
// -------------------------------------------------------------------------
inline constexpr const char* kJudgeTemplate =
    R"PROMPT(# TASK
Judge whether the AI response satisfies ONE evaluation criterion.
Score 1 (yes), 0.5 (partial), or 0 (no).

# QUERY
{query}

# RESPONSE TO EVALUATE
{report_content}

# CRITERION
{criterion}

# VERIFIED EVIDENCE
{verification_context}

# RULES
1. Judge only the criterion above; ignore unrelated qualities of the response.
2. If the criterion describes a flaw, score 1 when the flaw IS present,
   0.5 when partially present, 0 when absent.
3. When verified evidence is listed, weigh it above the response's own assertions.

# OUTPUT FORMAT
Return only valid JSON:
{"score": 0 | 0.5 | 1, "rationale": "one or two sentences"}
)PROMPT";

namespace detail {

inline void replace_all(std::string& text, std::string_view token, std::string_view value) {
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
        text.replace(pos, token.size(), value);
        pos += value.size();
    }
}

} // namespace detail

/// Renders the Layer-1 generation prompt. Byte-stable for identical inputs.
inline std::string render_query_prompt(const std::string& query, const ComposedRubric& rubric) {
    std::string prompt = kQueryChecklistTemplate;
    detail::replace_all(prompt, "{query}", query);
    detail::replace_all(prompt, "{deliverable_check}", rubric.deliverable_check);
    detail::replace_all(prompt, "{expert_hints}", rubric.expert_hints);
    return prompt;
}

inline std::string render_report_prompt(const std::string& query, const std::string& report) {
    std::string prompt = kReportChecklistTemplate;
    detail::replace_all(prompt, "{query}", query);
    detail::replace_all(prompt, "{report_content}", report);
    return prompt;
}

/// `source_context` is the pre-rendered "## Source URL" block (may be empty).
inline std::string render_verification_prompt(const Claim& claim, const std::string& current_date,
                                              const std::string& source_context) {
    std::string prompt = kVerificationTemplate;
    detail::replace_all(prompt, "{current_date}", current_date);
    detail::replace_all(prompt, "{claim}", claim.text);
    detail::replace_all(prompt, "{source_info}", source_context);
    return prompt;
}

inline std::string render_judge_prompt(const std::string& query, const std::string& report,
                                       const ChecklistItem& item,
                                       const std::string& verification_context) {
    std::string prompt = kJudgeTemplate;
    detail::replace_all(prompt, "{query}", query);
    detail::replace_all(prompt, "{report_content}", report);
    detail::replace_all(prompt, "{criterion}", item.description);
    detail::replace_all(prompt, "{verification_context}",
                        verification_context.empty() ? "(none)" : verification_context);
    return prompt;
}

/// One-shot repair re-prompt after a schema violation.
inline std::string render_repair_prompt(const std::string& original, const std::string& violation) {
    return original +
           "\n\n# VALIDATION ERROR\nThe previous response was invalid: " + violation +
           "\nReturn only valid JSON matching the OUTPUT FORMAT exactly.\n";
}

inline std::string prompt_hash(const std::string& prompt) { return hex_digest(prompt); }

} // namespace jade::prompts
