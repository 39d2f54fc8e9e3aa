#pragma once

#include "jade/errors.hpp"
#include "jade/json_util.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace jade {

enum class Tier { L1, L2, L3, General, ReportSpecific };
enum class ItemType { evidence, reasoning };
enum class ChecklistKind { query, report };

inline const char* to_string(Tier tier) {
    switch (tier) {
        case Tier::L1: return "L1";
        case Tier::L2: return "L2";
        case Tier::L3: return "L3";
        case Tier::General: return "General";
        case Tier::ReportSpecific: return "ReportSpecific";
    }
    return "?";
}

inline const char* to_string(ItemType type) {
    return type == ItemType::evidence ? "evidence" : "reasoning";
}

/// One atomic yes/no criterion. Negative weights mark critical flaws.
struct ChecklistItem {
    int item_id = 0;
    Tier tier = Tier::General;
    std::optional<std::vector<int>> depends_on;
    std::string category;
    std::string description;
    double weight = 0.0;
    std::string source_skill;
    ItemType item_type = ItemType::reasoning;
    std::optional<std::string> source_url;
};

struct Checklist {
    ChecklistKind kind = ChecklistKind::query;
    std::vector<ChecklistItem> items;
};

/// An atomic assertion extracted from a report. Evidence claims are the
/// only verification targets.
struct Claim {
    int claim_id = 0;
    ItemType kind = ItemType::evidence;
    std::string text;
    std::optional<std::string> source_url;
    double weight = 0.0;
};

/// Admissible weights. Defaults follow the stock configuration:
/// 15 core deliverable, 10 expert checkpoint, 5 general, -15 critical flaw.
struct WeightPolicy {
    std::vector<double> positive{5.0, 10.0, 15.0};
    double negative = -15.0;

    bool admissible(double w) const {
        if (w == negative) return true;
        return std::find(positive.begin(), positive.end(), w) != positive.end();
    }
};

struct ChecklistBounds {
    int query_min = 4;
    int query_max = 15;
    int report_min = 4;
    int report_max = 10;
};

namespace detail {

inline Tier tier_from_string(const std::string& s, const std::string& where,
                             const std::string& raw) {
    if (s == "L1") return Tier::L1;
    if (s == "L2") return Tier::L2;
    if (s == "L3") return Tier::L3;
    if (s == "General") return Tier::General;
    throw SchemaError(where + ": unknown tier '" + s + "'", raw);
}

inline double require_number(const nlohmann::json& j, const char* field,
                             const std::string& where, const std::string& raw) {
    if (!j.contains(field) || !j[field].is_number()) {
        throw SchemaError(where + "." + field + ": missing or non-numeric", raw);
    }
    return j[field].get<double>();
}

inline std::string require_string(const nlohmann::json& j, const char* field,
                                  const std::string& where, const std::string& raw) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw SchemaError(where + "." + field + ": missing or non-string", raw);
    }
    return j[field].get<std::string>();
}

inline std::optional<std::vector<int>> parse_depends_on(const nlohmann::json& j,
                                                        const std::string& where,
                                                        const std::string& raw) {
    if (!j.contains("depends_on") || j["depends_on"].is_null()) return std::nullopt;
    if (!j["depends_on"].is_array()) {
        throw SchemaError(where + ".depends_on: must be null or an array of claim ids", raw);
    }
    std::vector<int> deps;
    for (const auto& d : j["depends_on"]) {
        if (!d.is_number_integer()) {
            throw SchemaError(where + ".depends_on: ids must be integers", raw);
        }
        deps.push_back(d.get<int>());
    }
    return deps;
}

inline void check_common(const ChecklistItem& item, std::size_t index,
                         const WeightPolicy& weights, const std::string& raw) {
    const std::string where = "items[" + std::to_string(index) + "]";
    if (item.item_id != static_cast<int>(index)) {
        throw SchemaError(where + ".item_id: ids must be contiguous from 0 (got " +
                              std::to_string(item.item_id) + " at position " +
                              std::to_string(index) + ")",
                          raw);
    }
    if (item.description.empty()) {
        throw SchemaError(where + ".description: must be non-empty", raw);
    }
    if (item.weight == 0.0) throw SchemaError(where + ".weight: must be non-zero", raw);
    if (!weights.admissible(item.weight)) {
        throw SchemaError(where + ".weight: " + std::to_string(item.weight) +
                              " not in the admissible weight set",
                          raw);
    }
}

/// Self-containedness heuristic for claim texts: reject dangling referents.
inline bool starts_with_dangling_referent(const std::string& text) {
    std::string lowered;
    for (char c : text) {
        lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    static const char* kBad[] = {"it ",    "its ",  "they ", "them ",  "this ", "that ",
                                 "these ", "those ", "he ",   "she ",   "the above"};
    for (const char* prefix : kBad) {
        if (lowered.rfind(prefix, 0) == 0) return true;
    }
    return false;
}

} // namespace detail

/// Parses and validates a query checklist from model output.
/// Violations raise SchemaError with the offending field path.
inline Checklist parse_query_checklist(const std::string& response,
                                       const WeightPolicy& weights = {},
                                       const ChecklistBounds& bounds = {}) {
    const nlohmann::json doc = extract_json(response);
    if (!doc.is_array()) throw SchemaError("query checklist must be a JSON array", response);

    Checklist checklist;
    checklist.kind = ChecklistKind::query;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& j = doc[i];
        const std::string where = "items[" + std::to_string(i) + "]";
        if (!j.is_object()) throw SchemaError(where + ": must be an object", response);

        ChecklistItem item;
        item.item_id = static_cast<int>(detail::require_number(j, "item_id", where, response));
        item.tier = detail::tier_from_string(detail::require_string(j, "tier", where, response),
                                             where, response);
        item.depends_on = detail::parse_depends_on(j, where, response);
        item.category = detail::require_string(j, "category", where, response);
        item.description = detail::require_string(j, "description", where, response);
        item.weight = detail::require_number(j, "weight", where, response);
        item.source_skill = detail::require_string(j, "source_skill", where, response);
        item.item_type = ItemType::reasoning;
        detail::check_common(item, i, weights, response);
        checklist.items.push_back(std::move(item));
    }

    const int count = static_cast<int>(checklist.items.size());
    if (count < bounds.query_min || count > bounds.query_max) {
        throw SchemaError("query checklist has " + std::to_string(count) +
                              " items; expected between " + std::to_string(bounds.query_min) +
                              " and " + std::to_string(bounds.query_max),
                          response);
    }
    if (checklist.items[0].tier != Tier::L1) {
        throw SchemaError("items[0].tier: the core-deliverable gate must be tier L1", response);
    }
    return checklist;
}

/// Parses and validates a report checklist. Items are typed evidence or
/// reasoning; evidence items must not carry dependencies.
inline Checklist parse_report_checklist(const std::string& response,
                                        const WeightPolicy& weights = {},
                                        const ChecklistBounds& bounds = {}) {
    const nlohmann::json doc = extract_json(response);
    if (!doc.is_array()) throw SchemaError("report checklist must be a JSON array", response);

    Checklist checklist;
    checklist.kind = ChecklistKind::report;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& j = doc[i];
        const std::string where = "items[" + std::to_string(i) + "]";
        if (!j.is_object()) throw SchemaError(where + ": must be an object", response);

        ChecklistItem item;
        item.item_id = static_cast<int>(detail::require_number(j, "item_id", where, response));
        item.tier = Tier::ReportSpecific;
        const std::string type = detail::require_string(j, "type", where, response);
        if (type == "evidence") {
            item.item_type = ItemType::evidence;
        } else if (type == "reasoning") {
            item.item_type = ItemType::reasoning;
        } else {
            throw SchemaError(where + ".type: expected 'evidence' or 'reasoning', got '" + type +
                                  "'",
                              response);
        }
        item.depends_on = detail::parse_depends_on(j, where, response);
        item.category = detail::require_string(j, "category", where, response);
        item.description = detail::require_string(j, "description", where, response);
        item.weight = detail::require_number(j, "weight", where, response);
        item.source_skill = j.value("source_skill", std::string{});
        if (j.contains("source_url") && j["source_url"].is_string()) {
            item.source_url = j["source_url"].get<std::string>();
        }
        detail::check_common(item, i, weights, response);

        if (detail::starts_with_dangling_referent(item.description)) {
            throw SchemaError(where + ".description: not self-contained (dangling referent)",
                              response);
        }
        if (item.item_type == ItemType::evidence) {
            if (item.depends_on) {
                throw SchemaError(where + ".depends_on: evidence items must not carry dependencies",
                                  response);
            }
            if (item.weight < 0) {
                throw SchemaError(where + ".weight: evidence items must carry positive weight",
                                  response);
            }
        }
        checklist.items.push_back(std::move(item));
    }

    const int count = static_cast<int>(checklist.items.size());
    if (count < bounds.report_min || count > bounds.report_max) {
        throw SchemaError("report checklist has " + std::to_string(count) +
                              " items; expected between " + std::to_string(bounds.report_min) +
                              " and " + std::to_string(bounds.report_max),
                          response);
    }

    // Dependencies must point at evidence items within the same checklist.
    for (const auto& item : checklist.items) {
        if (!item.depends_on) continue;
        for (int dep : *item.depends_on) {
            const bool valid =
                dep >= 0 && dep < count && checklist.items[static_cast<std::size_t>(dep)].item_type ==
                                               ItemType::evidence;
            if (!valid) {
                throw SchemaError("items[" + std::to_string(item.item_id) +
                                      "].depends_on: id " + std::to_string(dep) +
                                      " does not name an evidence item",
                                  response);
            }
        }
    }
    return checklist;
}

/// Canonical JSON rendering; field order follows the wire format.
inline nlohmann::ordered_json checklist_to_json(const Checklist& checklist) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& item : checklist.items) {
        nlohmann::ordered_json j;
        j["item_id"] = item.item_id;
        if (checklist.kind == ChecklistKind::query) {
            j["tier"] = to_string(item.tier);
            j["depends_on"] =
                item.depends_on ? nlohmann::ordered_json(*item.depends_on) : nlohmann::ordered_json();
        } else {
            j["type"] = to_string(item.item_type);
            if (item.depends_on) j["depends_on"] = *item.depends_on;
        }
        j["category"] = item.category;
        j["description"] = item.description;
        j["weight"] = number_as_json(item.weight);
        if (checklist.kind == ChecklistKind::query) {
            j["source_skill"] = item.source_skill;
        } else if (!item.source_skill.empty()) {
            j["source_skill"] = item.source_skill;
        }
        if (item.source_url) j["source_url"] = *item.source_url;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::string serialize_checklist(const Checklist& checklist) {
    return checklist_to_json(checklist).dump(2);
}

/// Derives the claim set from a report checklist, one claim per item
/// (claim_id = item_id). Evidence claims are the verification targets.
inline std::vector<Claim> claims_from_report_checklist(const Checklist& checklist) {
    std::vector<Claim> claims;
    claims.reserve(checklist.items.size());
    for (const auto& item : checklist.items) {
        Claim claim;
        claim.claim_id = item.item_id;
        claim.kind = item.item_type;
        claim.text = item.description;
        claim.source_url = item.source_url;
        claim.weight = std::abs(item.weight);
        claims.push_back(std::move(claim));
    }
    return claims;
}

} // namespace jade
