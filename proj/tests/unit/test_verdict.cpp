#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jade;

TEST_CASE("verdict wire format parses and round-trips") {
    const std::string text = testutil::read_fixture("wire/c3_verdict.json");
    const VerificationVerdict verdict = parse_verdict(text);

    CHECK(verdict.conclusion == VerificationVerdict::Conclusion::yes);
    CHECK(verdict.confidence == 92);
    CHECK(verdict.reason.supporting.size() == 2);
    CHECK(verdict.reference_urls.contradicting.size() == 1);

    const std::string canonical = serialize_verdict(verdict);
    const VerificationVerdict reparsed = parse_verdict(canonical);
    CHECK(serialize_verdict(reparsed) == canonical);
    CHECK(nlohmann::json::parse(canonical) == nlohmann::json::parse(text));
}

TEST_CASE("malformed verdicts are rejected with the violated field") {
    SECTION("missing conclusion") {
        try {
            parse_verdict(testutil::read_fixture("wire/malformed/c3_missing_conclusion.json"));
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(e.violation().find("conclusion") != std::string::npos);
        }
    }

    SECTION("confidence out of range") {
        try {
            parse_verdict(
                testutil::read_fixture("wire/malformed/c3_confidence_out_of_range.json"));
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(e.violation().find("confidence") != std::string::npos);
        }
    }

    SECTION("lists must exist") {
        CHECK_THROWS_AS(parse_verdict(R"({"conclusion":"yes","confidence":50,
            "reason":{"summary":"s","supporting":[]},
            "reference_urls":{"supporting":[],"contradicting":[]}})"),
                        SchemaError);
    }

    SECTION("conclusion outside yes/no") {
        CHECK_THROWS_AS(parse_verdict(R"({"conclusion":"maybe","confidence":50,
            "reason":{"summary":"s","supporting":[],"contradicting":[]},
            "reference_urls":{"supporting":[],"contradicting":[]}})"),
                        SchemaError);
    }
}

static VerificationVerdict make(VerificationVerdict::Conclusion conclusion, int confidence) {
    VerificationVerdict v;
    v.conclusion = conclusion;
    v.confidence = confidence;
    return v;
}

TEST_CASE("verdict mapping") {
    using C = VerificationVerdict::Conclusion;
    CHECK(map_verdict(make(C::yes, 100)) == 1.0);
    CHECK(map_verdict(make(C::no, 100)) == 0.0);
    CHECK(map_verdict(make(C::no, 98)) == Catch::Approx(0.02));
    CHECK(map_verdict(make(C::yes, 0)) == 0.0);
    CHECK(map_verdict(make(C::no, 0)) == 1.0);
}

TEST_CASE("mapping is symmetric and monotone over the full confidence range") {
    using C = VerificationVerdict::Conclusion;
    double prev_yes = -1.0;
    double prev_no = 2.0;
    for (int c = 0; c <= 100; ++c) {
        const double yes = map_verdict(make(C::yes, c));
        const double no = map_verdict(make(C::no, c));
        CHECK(yes + no == 1.0);
        CHECK(yes >= 0.0);
        CHECK(yes <= 1.0);
        CHECK(yes > prev_yes);
        CHECK(no < prev_no);
        prev_yes = yes;
        prev_no = no;
    }
}
