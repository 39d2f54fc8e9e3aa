#pragma once

#include "jade/errors.hpp"
#include "jade/json_util.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jade {

/// The verification agent's final answer, exactly as on the wire.
struct VerificationVerdict {
    enum class Conclusion { yes, no };

    Conclusion conclusion = Conclusion::no;
    int confidence = 0; // 0..100

    struct Reason {
        std::string summary;
        std::vector<std::string> supporting;
        std::vector<std::string> contradicting;
    } reason;

    struct ReferenceUrls {
        std::vector<std::string> supporting;
        std::vector<std::string> contradicting;
    } reference_urls;
};

namespace detail {

inline std::vector<std::string> string_list(const nlohmann::json& j, const std::string& where,
                                            const std::string& raw) {
    if (!j.is_array()) throw SchemaError(where + ": must be an array", raw);
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw SchemaError(where + ": entries must be strings", raw);
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace detail

/// Parses the strict verdict JSON. Lists must exist (possibly empty);
/// confidence must lie in 0..100.
inline VerificationVerdict parse_verdict(const std::string& response) {
    const nlohmann::json doc = extract_json(response);
    if (!doc.is_object()) throw SchemaError("verdict must be a JSON object", response);
    if (!doc.contains("conclusion")) throw SchemaError("verdict.conclusion: missing", response);

    VerificationVerdict verdict;
    const std::string conclusion = doc["conclusion"].is_string()
                                       ? doc["conclusion"].get<std::string>()
                                       : doc["conclusion"].dump();
    if (conclusion == "yes") {
        verdict.conclusion = VerificationVerdict::Conclusion::yes;
    } else if (conclusion == "no") {
        verdict.conclusion = VerificationVerdict::Conclusion::no;
    } else {
        throw SchemaError("verdict.conclusion: expected 'yes' or 'no', got '" + conclusion + "'",
                          response);
    }

    if (!doc.contains("confidence") || !doc["confidence"].is_number()) {
        throw SchemaError("verdict.confidence: missing or non-numeric", response);
    }
    const double raw_confidence = doc["confidence"].get<double>();
    if (raw_confidence < 0 || raw_confidence > 100 ||
        raw_confidence != static_cast<int>(raw_confidence)) {
        throw SchemaError("verdict.confidence: must be an integer in 0..100", response);
    }
    verdict.confidence = static_cast<int>(raw_confidence);

    if (!doc.contains("reason") || !doc["reason"].is_object()) {
        throw SchemaError("verdict.reason: missing", response);
    }
    const auto& reason = doc["reason"];
    if (!reason.contains("summary") || !reason["summary"].is_string()) {
        throw SchemaError("verdict.reason.summary: missing", response);
    }
    verdict.reason.summary = reason["summary"].get<std::string>();
    if (!reason.contains("supporting") || !reason.contains("contradicting")) {
        throw SchemaError("verdict.reason: supporting/contradicting lists must exist", response);
    }
    verdict.reason.supporting = detail::string_list(reason["supporting"],
                                                    "verdict.reason.supporting", response);
    verdict.reason.contradicting =
        detail::string_list(reason["contradicting"], "verdict.reason.contradicting", response);

    if (!doc.contains("reference_urls") || !doc["reference_urls"].is_object()) {
        throw SchemaError("verdict.reference_urls: missing", response);
    }
    const auto& refs = doc["reference_urls"];
    if (!refs.contains("supporting") || !refs.contains("contradicting")) {
        throw SchemaError("verdict.reference_urls: supporting/contradicting lists must exist",
                          response);
    }
    verdict.reference_urls.supporting =
        detail::string_list(refs["supporting"], "verdict.reference_urls.supporting", response);
    verdict.reference_urls.contradicting = detail::string_list(
        refs["contradicting"], "verdict.reference_urls.contradicting", response);
    return verdict;
}

inline nlohmann::ordered_json verdict_to_json(const VerificationVerdict& verdict) {
    nlohmann::ordered_json j;
    j["conclusion"] = verdict.conclusion == VerificationVerdict::Conclusion::yes ? "yes" : "no";
    j["confidence"] = verdict.confidence;
    j["reason"] = {{"summary", verdict.reason.summary},
                   {"supporting", verdict.reason.supporting},
                   {"contradicting", verdict.reason.contradicting}};
    j["reference_urls"] = {{"supporting", verdict.reference_urls.supporting},
                           {"contradicting", verdict.reference_urls.contradicting}};
    return j;
}

inline std::string serialize_verdict(const VerificationVerdict& verdict) {
    return verdict_to_json(verdict).dump(2);
}

/// Maps a verdict to the claim reliability score V in [0,1]:
/// confidence/100 for "yes", 1 - confidence/100 for "no". Symmetric:
/// map(yes,c) + map(no,c) = 1 for every confidence c.
inline double map_verdict(const VerificationVerdict& verdict) {
    const double c = static_cast<double>(verdict.confidence) / 100.0;
    return verdict.conclusion == VerificationVerdict::Conclusion::yes ? c : 1.0 - c;
}

} // namespace jade
