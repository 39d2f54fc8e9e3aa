#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace jade;

TEST_CASE("standard taxonomy has the 4/7/6 vocabulary") {
    const auto& tax = Taxonomy::standard();
    CHECK(tax.names(LabelLevel::L1).size() == 4);
    CHECK(tax.names(LabelLevel::L2).size() == 7);
    CHECK(tax.names(LabelLevel::L3).size() == 6);
    CHECK(tax.contains({LabelLevel::L1, "supplier_sourcing"}));
    CHECK(tax.contains({LabelLevel::L3, "logistics_shipping"}));
    CHECK_FALSE(tax.contains({LabelLevel::L1, "supplier_sourcingg"}));
    CHECK_FALSE(tax.contains({LabelLevel::L2, "supplier_sourcing"}));
}

TEST_CASE("skill library loads with one skill per label") {
    const auto lib = testutil::load_test_library();
    CHECK(lib.version() == "bizbench-skills-1.0");
    CHECK(lib.skills().size() == 17);
    for (const auto& label : Taxonomy::standard().all_labels()) {
        INFO(label.name);
        CHECK(lib.find(label) != nullptr);
    }
    const Skill* sourcing = lib.find({LabelLevel::L1, "supplier_sourcing"});
    REQUIRE(sourcing != nullptr);
    REQUIRE(sourcing->primary_deliverable.has_value());
    CHECK(sourcing->primary_deliverable->must_have.size() == 3);
    CHECK_FALSE(sourcing->hints.empty());
}

TEST_CASE("library missing a label is rejected") {
    CHECK_THROWS_AS(SkillLibrary::load_file(testutil::fixture_path("skills/missing_logistics.json"),
                                            Taxonomy::standard()),
                    MissingSkillForLabel);
}

TEST_CASE("duplicate skill names are rejected") {
    CHECK_THROWS_AS(
        SkillLibrary::load_file(testutil::fixture_path("skills/duplicate_price_comparison.json"),
                                Taxonomy::standard()),
        DuplicateSkill);
}

TEST_CASE("library rejects malformed documents") {
    const auto& tax = Taxonomy::standard();
    CHECK_THROWS_AS(SkillLibrary::load("not json", tax), ParseError);
    CHECK_THROWS_AS(SkillLibrary::load(R"({"skills": []})", tax), ParseError);
    CHECK_THROWS_AS(
        SkillLibrary::load(
            R"({"version":"x","skills":[{"label_level":"L9","label_name":"a","name":"A","description":"d","hints":[{"rule":"r"}]}]})",
            tax),
        ParseError);
}

TEST_CASE("activation is ordered L1, L2, L3 then declaration order") {
    const auto lib = testutil::load_test_library();
    const std::vector<TaxonomyLabel> labels{
        {LabelLevel::L3, "certification_required"},
        {LabelLevel::L2, "supplier_evaluation"},
        {LabelLevel::L1, "supplier_sourcing"},
    };
    const auto activated = activate_skills(labels, lib);
    REQUIRE(activated.size() == 3);
    CHECK(activated[0].name == "Supplier Sourcing");
    CHECK(activated[1].name == "Supplier Evaluation");
    CHECK(activated[2].name == "Certification Required");
}

TEST_CASE("empty label set activates nothing") {
    const auto lib = testutil::load_test_library();
    CHECK(activate_skills({}, lib).empty());
}

TEST_CASE("unknown label raises") {
    const auto lib = testutil::load_test_library();
    CHECK_THROWS_AS(activate_skills({{LabelLevel::L1, "nonexistent"}}, lib), UnknownLabel);
}

TEST_CASE("activation deduplicates and is idempotent") {
    const auto lib = testutil::load_test_library();
    const std::vector<TaxonomyLabel> labels{
        {LabelLevel::L2, "price_comparison"},
        {LabelLevel::L2, "price_comparison"},
    };
    const auto activated = activate_skills(labels, lib);
    REQUIRE(activated.size() == 1);
    CHECK(activated[0].name == "Price Comparison");
}

static std::string serialized_activation(const std::vector<Skill>& skills) {
    std::string out;
    for (const auto& skill : skills) out += skill.name + "|";
    return out;
}

TEST_CASE("activation is deterministic across calls") {
    const auto lib = testutil::load_test_library();
    const std::vector<TaxonomyLabel> labels{
        {LabelLevel::L1, "market_research"},
        {LabelLevel::L2, "trending_analysis"},
        {LabelLevel::L2, "price_comparison"},
        {LabelLevel::L3, "region_specific"},
    };
    const auto first = serialized_activation(activate_skills(labels, lib));
    const auto second = serialized_activation(activate_skills(labels, lib));
    CHECK(first == second);

    const auto rubric_a = compose_rubric(activate_skills(labels, lib));
    const auto rubric_b = compose_rubric(activate_skills(labels, lib));
    CHECK(rubric_a.deliverable_check == rubric_b.deliverable_check);
    CHECK(rubric_a.expert_hints == rubric_b.expert_hints);
    CHECK(rubric_a.activated == rubric_b.activated);
}

TEST_CASE("activation is monotone over label subsets") {
    const auto lib = testutil::load_test_library();
    const auto all = Taxonomy::standard().all_labels();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<TaxonomyLabel> subset;
        std::vector<TaxonomyLabel> superset;
        for (const auto& label : all) {
            const int roll = static_cast<int>(rng() % 3);
            if (roll == 0) subset.push_back(label);
            if (roll <= 1) superset.push_back(label);
        }
        // force subset ⊆ superset
        for (const auto& label : subset) {
            if (std::find(superset.begin(), superset.end(), label) == superset.end()) {
                superset.push_back(label);
            }
        }
        const auto small = activate_skills(subset, lib);
        const auto big = activate_skills(superset, lib);
        for (const auto& skill : small) {
            const bool found = std::any_of(big.begin(), big.end(), [&](const Skill& s) {
                return s.name == skill.name;
            });
            CHECK(found);
        }
    }
}

TEST_CASE("composed rubric renders deliverables and hints in order") {
    const auto lib = testutil::load_test_library();

    SECTION("supplier sourcing deliverable") {
        const auto rubric =
            compose_rubric(activate_skills({{LabelLevel::L1, "supplier_sourcing"}}, lib));
        CHECK(rubric.deliverable_check.find("Direct, verifiable URLs") != std::string::npos);
        CHECK(rubric.activated == std::vector<std::string>{"Supplier Sourcing"});
    }

    SECTION("empty composition yields the sentinel rubric") {
        const auto rubric = compose_rubric({});
        CHECK(rubric.expert_hints == kNoHintsSentinel);
        CHECK(rubric.deliverable_check == kNoDeliverableSentinel);
        CHECK(rubric.activated.empty());
    }

    SECTION("hint blocks appear in activation order") {
        const auto rubric = compose_rubric(activate_skills(
            {{LabelLevel::L3, "certification_required"}, {LabelLevel::L2, "price_comparison"}},
            lib));
        const auto price_pos = rubric.expert_hints.find("Specify price scope");
        const auto cert_pos = rubric.expert_hints.find("certification requirements");
        REQUIRE(price_pos != std::string::npos);
        REQUIRE(cert_pos != std::string::npos);
        CHECK(price_pos < cert_pos);
        // L2/L3 skills carry no deliverable
        CHECK(rubric.deliverable_check == kNoDeliverableSentinel);
    }
}
