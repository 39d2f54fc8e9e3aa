#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jade;

TEST_CASE("run config loads with paths resolved against the file directory") {
    const RunConfig cfg = load_run_config_file(testutil::fixture_path("e2e/config.json"));
    CHECK(cfg.replicates == 3);
    CHECK(cfg.tau == 0.5);
    CHECK(cfg.tool_budget == 5);
    CHECK(cfg.current_date == "2026-01-17");
    CHECK(cfg.clock == "fixed:1768608000");
    CHECK(cfg.skill_library_path.find("skills/bizbench_skills.json") != std::string::npos);
    CHECK(cfg.generator.type == "mock");
    CHECK(cfg.generator.backend_id == "mock-gen");
    CHECK(std::filesystem::exists(cfg.generator.script));
    CHECK_NOTHROW(validate_config_paths(cfg));
}

TEST_CASE("config validation failures") {
    CHECK_THROWS_AS(load_run_config("{\"replicates\": 0}"), ConfigError);
    CHECK_THROWS_AS(load_run_config("{\"tokenizer\": \"bpe\"}"), ConfigError);
    CHECK_THROWS_AS(load_run_config("{\"tool_budget\": 0}"), ConfigError);
    CHECK_THROWS_AS(load_run_config("not json"), ConfigError);
    CHECK_THROWS_AS(load_run_config(R"({"backends": {"generator": {"type": "mock"}}})"),
                    ConfigError);
    CHECK_THROWS_AS(load_run_config(R"({"backends": {"generator": {"type": "http"}}})"),
                    ConfigError);
    CHECK_THROWS_AS(load_run_config(R"({"backends": {"generator": {"type": "quantum"}}})"),
                    ConfigError);

    RunConfig missing;
    missing.skill_library_path = "/nonexistent/skills.json";
    CHECK_THROWS_AS(validate_config_paths(missing), ConfigError);
}

TEST_CASE("run identity is stable and placement-independent") {
    RunConfig a = load_run_config_file(testutil::fixture_path("e2e/config.json"));
    RunConfig b = load_run_config_file(testutil::fixture_path("e2e/config.json"));
    CHECK(a.run_id() == b.run_id());

    // writing elsewhere must not change the identity
    b.output_dir = "/tmp/somewhere-else";
    CHECK(a.run_id() == b.run_id());

    // evaluation-relevant settings do
    b.tau = 0.7;
    CHECK(a.run_id() != b.run_id());
}

TEST_CASE("clock specs") {
    CHECK(make_clock("fixed:42")() == 42);
    CHECK(make_clock("fixed:0")() == 0);
    CHECK(make_clock("system")() > 0);
    CHECK_THROWS_AS(make_clock("sundial"), ConfigError);
}

TEST_CASE("weight policy admits exactly the configured set") {
    WeightPolicy policy;
    CHECK(policy.admissible(5));
    CHECK(policy.admissible(10));
    CHECK(policy.admissible(15));
    CHECK(policy.admissible(-15));
    CHECK_FALSE(policy.admissible(7));
    CHECK_FALSE(policy.admissible(-5));
    CHECK_FALSE(policy.admissible(0));
}
