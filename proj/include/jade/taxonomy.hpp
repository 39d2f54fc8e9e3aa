#pragma once

#include "jade/errors.hpp"

#include <array>
#include <string>
#include <tuple>
#include <vector>

namespace jade {

enum class LabelLevel { L1, L2, L3 };

inline const char* to_string(LabelLevel level) {
    switch (level) {
        case LabelLevel::L1: return "L1";
        case LabelLevel::L2: return "L2";
        case LabelLevel::L3: return "L3";
    }
    return "?";
}

inline LabelLevel label_level_from_string(const std::string& s) {
    if (s == "L1") return LabelLevel::L1;
    if (s == "L2") return LabelLevel::L2;
    if (s == "L3") return LabelLevel::L3;
    throw ParseError("", "unknown label level '" + s + "' (expected L1, L2 or L3)");
}

struct TaxonomyLabel {
    LabelLevel level;
    std::string name;

    friend bool operator==(const TaxonomyLabel&, const TaxonomyLabel&) = default;
    friend auto operator<=>(const TaxonomyLabel& a, const TaxonomyLabel& b) {
        return std::tie(a.level, a.name) <=> std::tie(b.level, b.name);
    }
};

/// The configured label vocabulary, one name list per level.
class Taxonomy {
public:
    Taxonomy(std::vector<std::string> l1, std::vector<std::string> l2, std::vector<std::string> l3)
        : levels_{std::move(l1), std::move(l2), std::move(l3)} {}

    /// The stock vocabulary: 4 primary intents, 7 information needs,
    /// 6 operational constraints.
    static const Taxonomy& standard() {
        static const Taxonomy tax(
            {"supplier_sourcing", "product_discovery", "market_research", "product_development"},
            {"supplier_evaluation", "price_comparison", "review_analysis", "sales_data",
             "trending_analysis", "platform_data", "competitor_analysis"},
            {"moq_price_constraint", "certification_required", "region_specific",
             "customization_oem", "quality_specification", "logistics_shipping"});
        return tax;
    }

    const std::vector<std::string>& names(LabelLevel level) const {
        return levels_[static_cast<std::size_t>(level)];
    }

    bool contains(const TaxonomyLabel& label) const {
        const auto& names = levels_[static_cast<std::size_t>(label.level)];
        for (const auto& name : names) {
            if (name == label.name) return true;
        }
        return false;
    }

    /// All labels, L1 first, in declaration order.
    std::vector<TaxonomyLabel> all_labels() const {
        std::vector<TaxonomyLabel> out;
        for (LabelLevel level : {LabelLevel::L1, LabelLevel::L2, LabelLevel::L3}) {
            for (const auto& name : names(level)) {
                out.push_back({level, name});
            }
        }
        return out;
    }

    std::size_t size() const {
        return levels_[0].size() + levels_[1].size() + levels_[2].size();
    }

private:
    std::array<std::vector<std::string>, 3> levels_;
};

} // namespace jade
