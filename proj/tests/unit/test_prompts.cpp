#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jade;

TEST_CASE("query prompt embeds its inputs into the template") {
    const auto lib = testutil::load_test_library();
    const auto rubric =
        compose_rubric(activate_skills({{LabelLevel::L1, "supplier_sourcing"}}, lib));
    const std::string prompt = prompts::render_query_prompt("find FDA-certified suppliers", rubric);

    CHECK(prompt.find("# CORE DELIVERABLE (L1 Gate)") != std::string::npos);
    CHECK(prompt.find("find FDA-certified suppliers") != std::string::npos);
    CHECK(prompt.find("Direct, verifiable URLs") != std::string::npos);
    const auto header = prompt.find("# CORE DELIVERABLE (L1 Gate)");
    const auto deliverable = prompt.find(rubric.deliverable_check);
    REQUIRE(deliverable != std::string::npos);
    CHECK(header < deliverable);
    CHECK(prompt.find("{query}") == std::string::npos);
    CHECK(prompt.find("{deliverable_check}") == std::string::npos);
    CHECK(prompt.find("{expert_hints}") == std::string::npos);
}

TEST_CASE("empty rubric renders the sentinel under the checkpoints header") {
    const std::string prompt = prompts::render_query_prompt("x", compose_rubric({}));
    const auto header = prompt.find("# EXPERT CHECKPOINTS");
    const auto sentinel = prompt.find("(no expert checkpoints)");
    REQUIRE(header != std::string::npos);
    REQUIRE(sentinel != std::string::npos);
    CHECK(header < sentinel);
}

TEST_CASE("prompt hashing is stable and input-sensitive") {
    const auto rubric = compose_rubric({});
    const std::string a = prompts::render_query_prompt("query text", rubric);
    const std::string b = prompts::render_query_prompt("query text", rubric);
    const std::string c = prompts::render_query_prompt("other text", rubric);
    CHECK(a == b);
    CHECK(prompts::prompt_hash(a) == prompts::prompt_hash(b));
    CHECK(prompts::prompt_hash(a) != prompts::prompt_hash(c));
}

TEST_CASE("report prompt embeds query and response") {
    const std::string prompt = prompts::render_report_prompt("the query", "the report body");
    CHECK(prompt.find("# RESPONSE TO EVALUATE") != std::string::npos);
    CHECK(prompt.find("the report body") != std::string::npos);
    CHECK(prompt.find("SELF-CONTAINED") != std::string::npos);
}

TEST_CASE("verification prompt carries date, claim and source block") {
    Claim claim;
    claim.claim_id = 0;
    claim.kind = ItemType::evidence;
    claim.text = "Verify that the rate is 0.72.";
    const std::string bare = prompts::render_verification_prompt(claim, "2026-01-17", "");
    CHECK(bare.find("## Current Date: 2026-01-17") != std::string::npos);
    CHECK(bare.find(claim.text) != std::string::npos);
    CHECK(bare.find("18/8 stainless steel = 304 stainless steel") != std::string::npos);

    const std::string sourced = prompts::render_verification_prompt(
        claim, "2026-01-17", "## Source URL\nhttps://x.test\n\n## Source URL Content\nbody\n");
    CHECK(sourced.find("## Source URL") != std::string::npos);
}

TEST_CASE("judge prompt embeds the criterion and verdict context") {
    ChecklistItem item;
    item.item_id = 3;
    item.description = "Does the response mention risks?";
    const std::string without =
        prompts::render_judge_prompt("q", "r", item, "");
    CHECK(without.find("# CRITERION") != std::string::npos);
    CHECK(without.find(item.description) != std::string::npos);
    CHECK(without.find("(none)") != std::string::npos);

    const std::string with =
        prompts::render_judge_prompt("q", "r", item, "- claim 2: refuted\n");
    CHECK(with.find("- claim 2: refuted") != std::string::npos);
}

TEST_CASE("repair prompt appends the violation to the original") {
    const std::string repair = prompts::render_repair_prompt("ORIGINAL", "ids must be contiguous");
    CHECK(repair.find("ORIGINAL") == 0);
    CHECK(repair.find("# VALIDATION ERROR") != std::string::npos);
    CHECK(repair.find("ids must be contiguous") != std::string::npos);
}

TEST_CASE("templates match their versioned fixture files") {
    CHECK(prompts::kQueryChecklistTemplate ==
          testutil::read_fixture("prompts/query_checklist_v1.txt"));
    CHECK(prompts::kReportChecklistTemplate ==
          testutil::read_fixture("prompts/report_checklist_v1.txt"));
    CHECK(prompts::kVerificationTemplate ==
          testutil::read_fixture("prompts/verification_v1.txt"));
    CHECK(prompts::kJudgeTemplate == testutil::read_fixture("prompts/judge_v1.txt"));
}
