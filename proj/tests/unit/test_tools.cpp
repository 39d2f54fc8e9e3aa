#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jade;

static nlohmann::json tool_script() {
    return nlohmann::json::parse(R"({
      "search": {
        "CAD to USD rate": "0.719-0.720 USD",
        "broken search": {"error": "unavailable"}
      },
      "url_context": {
        "https://ok.test/page": "page text",
        "https://gone.test/404": {"error": "not_found"}
      }
    })");
}

TEST_CASE("mock tool suite replays scripts and never improvises") {
    MockToolSuite tools(tool_script());
    CHECK(tools.search("CAD to USD rate") == "0.719-0.720 USD");
    CHECK(tools.url_context("https://ok.test/page") == "page text");
    CHECK_THROWS_AS(tools.search("anything else"), ToolError);

    try {
        tools.url_context("https://gone.test/404");
        FAIL("expected ToolError");
    } catch (const ToolError& e) {
        CHECK(e.kind() == "not_found");
    }
}

TEST_CASE("budget is enforced per wrapper") {
    MockToolSuite tools(tool_script());

    SECTION("second call over a budget of one") {
        BudgetedTools budgeted(tools, 1);
        CHECK_NOTHROW(budgeted.search("CAD to USD rate"));
        CHECK_THROWS_AS(budgeted.search("CAD to USD rate"), ToolBudgetExceeded);
    }

    SECTION("failed calls consume budget and are traced") {
        BudgetedTools budgeted(tools, 2);
        CHECK_THROWS_AS(budgeted.search("broken search"), ToolError);
        CHECK(budgeted.remaining() == 1);
        REQUIRE(budgeted.trace().size() == 1);
        CHECK_FALSE(budgeted.trace()[0].ok);
        CHECK(budgeted.trace()[0].tool == ToolKind::search);
    }

    SECTION("budget below one is a config error") {
        CHECK_THROWS_AS(BudgetedTools(tools, 0), ConfigError);
    }
}

TEST_CASE("trace records inputs and output digests in call order") {
    MockToolSuite tools(tool_script());
    BudgetedTools budgeted(tools, 5);
    budgeted.url_context("https://ok.test/page");
    budgeted.search("CAD to USD rate");

    REQUIRE(budgeted.trace().size() == 2);
    CHECK(budgeted.trace()[0].tool == ToolKind::url_context);
    CHECK(budgeted.trace()[0].input == "https://ok.test/page");
    CHECK(budgeted.trace()[0].output_digest == hex_digest("page text"));
    CHECK(budgeted.trace()[1].tool == ToolKind::search);
}
