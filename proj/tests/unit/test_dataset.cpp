#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jade;

TEST_CASE("benchmark dataset ingests with labels validated") {
    const auto queries =
        ingest_file(testutil::fixture_path("dataset/bizbench_sample.json"), Taxonomy::standard());

    REQUIRE(queries.size() == 4);
    CHECK(queries[0].id == 8);
    CHECK(queries[0].l1_primary_intent == "supplier_sourcing");
    CHECK(queries[0].l2_information_need ==
          std::vector<std::string>{"supplier_evaluation", "platform_data"});
    CHECK(queries[0].l3_constraints.size() == 3);

    // id 16 carries an empty constraint list
    CHECK(queries[1].id == 16);
    CHECK(queries[1].l3_constraints.empty());

    const auto labels = queries[0].labels();
    REQUIRE(labels.size() == 6);
    CHECK(labels[0].level == LabelLevel::L1);
    CHECK(labels[5].name == "region_specific");
}

TEST_CASE("duplicate query ids are rejected") {
    const std::string doc = R"([
      {"id": 1, "query": "a", "L1_primary_intent": "market_research",
       "L2_information_need": [], "L3_constraints": []},
      {"id": 1, "query": "b", "L1_primary_intent": "market_research",
       "L2_information_need": [], "L3_constraints": []}
    ])";
    try {
        ingest(doc, Taxonomy::standard());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("duplicate-id") != std::string::npos);
        CHECK(e.location() == "[1].id");
    }
}

TEST_CASE("unknown labels are rejected with their location") {
    const std::string doc = R"([
      {"id": 1, "query": "a", "L1_primary_intent": "supplier_sourcingg",
       "L2_information_need": [], "L3_constraints": []}
    ])";
    try {
        ingest(doc, Taxonomy::standard());
        FAIL("expected UnknownLabel");
    } catch (const UnknownLabel& e) {
        CHECK(e.label() == "supplier_sourcingg");
        CHECK(std::string(e.what()).find("[0].L1_primary_intent") != std::string::npos);
    }

    const std::string doc2 = R"([
      {"id": 1, "query": "a", "L1_primary_intent": "market_research",
       "L2_information_need": ["price_comparison"], "L3_constraints": ["certification_requiredd"]}
    ])";
    try {
        ingest(doc2, Taxonomy::standard());
        FAIL("expected UnknownLabel");
    } catch (const UnknownLabel& e) {
        CHECK(std::string(e.what()).find("L3_constraints[0]") != std::string::npos);
    }
}

TEST_CASE("structurally broken datasets are parse errors") {
    CHECK_THROWS_AS(ingest("{}", Taxonomy::standard()), ParseError);
    CHECK_THROWS_AS(ingest("not json", Taxonomy::standard()), ParseError);
    CHECK_THROWS_AS(ingest(R"([{"id": 1}])", Taxonomy::standard()), ParseError);
    CHECK_THROWS_AS(ingest(R"([{"id": 1, "query": "", "L1_primary_intent": "market_research",
                               "L2_information_need": [], "L3_constraints": []}])",
                           Taxonomy::standard()),
                    ParseError);
}
