#pragma once

#include "jade/errors.hpp"
#include "jade/json_util.hpp"
#include "jade/taxonomy.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace jade {

/// One benchmark query with its multi-label annotation.
struct BenchQuery {
    int id = 0;
    std::string query;
    std::string l1_primary_intent;
    std::vector<std::string> l2_information_need;
    std::vector<std::string> l3_constraints;

    std::vector<TaxonomyLabel> labels() const {
        std::vector<TaxonomyLabel> out;
        out.push_back({LabelLevel::L1, l1_primary_intent});
        for (const auto& name : l2_information_need) out.push_back({LabelLevel::L2, name});
        for (const auto& name : l3_constraints) out.push_back({LabelLevel::L3, name});
        return out;
    }
};

/// Parses the dataset file: a JSON array of
/// {id, query, L1_primary_intent, L2_information_need, L3_constraints}.
/// Labels are validated against the taxonomy; unknown labels and
/// duplicate ids are rejected with their location.
inline std::vector<BenchQuery> ingest(const std::string& text, const Taxonomy& taxonomy) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_array()) throw ParseError("", "dataset must be a JSON array of queries");

    std::vector<BenchQuery> queries;
    std::set<int> seen_ids;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& entry = doc[i];
        const std::string where = "[" + std::to_string(i) + "]";
        for (const char* field :
             {"id", "query", "L1_primary_intent", "L2_information_need", "L3_constraints"}) {
            if (!entry.contains(field)) {
                throw ParseError(where + "." + field, "missing required field");
            }
        }

        BenchQuery q;
        if (!entry["id"].is_number_integer()) throw ParseError(where + ".id", "must be an integer");
        q.id = entry["id"].get<int>();
        if (!seen_ids.insert(q.id).second) {
            throw ParseError(where + ".id", "duplicate-id " + std::to_string(q.id));
        }
        q.query = entry["query"].get<std::string>();
        if (q.query.empty()) throw ParseError(where + ".query", "must be non-empty");

        q.l1_primary_intent = entry["L1_primary_intent"].get<std::string>();
        if (!taxonomy.contains({LabelLevel::L1, q.l1_primary_intent})) {
            throw UnknownLabel(q.l1_primary_intent, where + ".L1_primary_intent");
        }
        if (!entry["L2_information_need"].is_array() || !entry["L3_constraints"].is_array()) {
            throw ParseError(where, "L2_information_need and L3_constraints must be arrays");
        }
        for (std::size_t k = 0; k < entry["L2_information_need"].size(); ++k) {
            const std::string name = entry["L2_information_need"][k].get<std::string>();
            if (!taxonomy.contains({LabelLevel::L2, name})) {
                throw UnknownLabel(name, where + ".L2_information_need[" + std::to_string(k) + "]");
            }
            q.l2_information_need.push_back(name);
        }
        for (std::size_t k = 0; k < entry["L3_constraints"].size(); ++k) {
            const std::string name = entry["L3_constraints"][k].get<std::string>();
            if (!taxonomy.contains({LabelLevel::L3, name})) {
                throw UnknownLabel(name, where + ".L3_constraints[" + std::to_string(k) + "]");
            }
            q.l3_constraints.push_back(name);
        }
        queries.push_back(std::move(q));
    }
    return queries;
}

inline std::vector<BenchQuery> ingest_file(const std::string& path, const Taxonomy& taxonomy) {
    return ingest(read_text_file(path), taxonomy);
}

} // namespace jade
