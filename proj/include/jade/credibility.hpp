#pragma once

#include "jade/errors.hpp"
#include "jade/json_util.hpp"
#include "jade/url.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace jade {

/// Source authority tiers. T1 official platforms / government / academic,
/// T2 authoritative data and global media, T3 professional tech media,
/// T4 unknown sources.
enum class SourceTier { T1, T2, T3, T4 };

inline const char* to_string(SourceTier tier) {
    switch (tier) {
        case SourceTier::T1: return "T1";
        case SourceTier::T2: return "T2";
        case SourceTier::T3: return "T3";
        case SourceTier::T4: return "T4";
    }
    return "?";
}

inline double tier_score(SourceTier tier) {
    switch (tier) {
        case SourceTier::T1: return 1.00;
        case SourceTier::T2: return 0.75;
        case SourceTier::T3: return 0.50;
        case SourceTier::T4: return 0.25;
    }
    return 0.25;
}

inline SourceTier tier_from_string(const std::string& s) {
    if (s == "T1") return SourceTier::T1;
    if (s == "T2") return SourceTier::T2;
    if (s == "T3") return SourceTier::T3;
    if (s == "T4") return SourceTier::T4;
    throw ParseError("", "unknown tier '" + s + "' (expected T1..T4)");
}

/// Editable domain-suffix -> tier map. Matching is longest-suffix on
/// label boundaries, so an entry for "census.gov" beats "gov".
class TierTable {
public:
    TierTable() = default;

    explicit TierTable(std::vector<std::pair<std::string, SourceTier>> entries)
        : entries_(std::move(entries)) {}

    /// Seeded from the stock tier examples.
    static TierTable standard() {
        return TierTable({
            {"tiktok.com", SourceTier::T1},
            {"google.com", SourceTier::T1},
            {"microsoft.com", SourceTier::T1},
            {"gov", SourceTier::T1},
            {"edu", SourceTier::T1},
            {"statista.com", SourceTier::T2},
            {"springer.com", SourceTier::T2},
            {"wsj.com", SourceTier::T2},
            {"economist.com", SourceTier::T2},
            {"techcrunch.com", SourceTier::T3},
            {"github.com", SourceTier::T3},
            {"stackoverflow.com", SourceTier::T3},
        });
    }

    /// File format: JSON array of {"domain_suffix": ..., "tier": "T1".."T4"}.
    static TierTable load(const std::string& text) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("byte " + std::to_string(e.byte), e.what());
        }
        if (!doc.is_array()) throw ParseError("", "tier table must be a JSON array");
        std::vector<std::pair<std::string, SourceTier>> entries;
        for (std::size_t i = 0; i < doc.size(); ++i) {
            const auto& entry = doc[i];
            const std::string where = "[" + std::to_string(i) + "]";
            if (!entry.is_object() || !entry.contains("domain_suffix") || !entry.contains("tier")) {
                throw ParseError(where, "each entry needs domain_suffix and tier");
            }
            entries.emplace_back(entry["domain_suffix"].get<std::string>(),
                                 tier_from_string(entry["tier"].get<std::string>()));
        }
        return TierTable(std::move(entries));
    }

    static TierTable load_file(const std::string& path) { return load(read_text_file(path)); }

    SourceTier classify_host(const std::string& host) const {
        const std::pair<std::string, SourceTier>* best = nullptr;
        for (const auto& entry : entries_) {
            if (!host_matches_suffix(host, entry.first)) continue;
            if (!best || entry.first.size() > best->first.size()) best = &entry;
        }
        if (best) return best->second;
        // Government and academic TLDs are official even when unlisted.
        if (host_matches_suffix(host, "gov") || host_matches_suffix(host, "edu")) {
            return SourceTier::T1;
        }
        return SourceTier::T4;
    }

    const std::vector<std::pair<std::string, SourceTier>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, SourceTier>> entries_;
};

struct SourceRating {
    std::string url;
    SourceTier tier;
    double s_tier;
};

struct SourceCredibility {
    std::vector<SourceRating> per_url;
    double q_score = 0.0;
    char grade = 'F';
    std::vector<std::string> recommendations;
};

/// Pure classification of a single URL. Throws InvalidUrl on syntax errors.
inline SourceRating classify_source(const std::string& url, const TierTable& table) {
    const SourceTier tier = table.classify_host(url_host(url));
    return {url, tier, tier_score(tier)};
}

/// Grade boundaries below the fixed A rule. A requires Q >= 0.75 plus at
/// least one T1 source; F is Q < 0.3 or all sources unknown.
struct GradeThresholds {
    double b = 0.60;
    double c = 0.45;
    double d = 0.30;
};

/// Position-weighted source quality: Q = sum(S_tier_i / i) / sum(1 / i).
/// The first citation counts most. Malformed URLs rate as unknown (T4)
/// rather than aborting the evaluation.
inline SourceCredibility score_sources(const std::vector<std::string>& urls,
                                       const TierTable& table,
                                       const GradeThresholds& thresholds = {}) {
    SourceCredibility out;

    bool any_t1 = false;
    bool all_t4 = true;
    double weighted_sum = 0.0;
    double weight_total = 0.0;
    for (std::size_t i = 0; i < urls.size(); ++i) {
        SourceRating rating{urls[i], SourceTier::T4, tier_score(SourceTier::T4)};
        try {
            rating = classify_source(urls[i], table);
        } catch (const InvalidUrl&) {
            // keep T4
        }
        const double position_weight = 1.0 / static_cast<double>(i + 1);
        weighted_sum += rating.s_tier * position_weight;
        weight_total += position_weight;
        any_t1 = any_t1 || rating.tier == SourceTier::T1;
        all_t4 = all_t4 && rating.tier == SourceTier::T4;
        out.per_url.push_back(std::move(rating));
    }

    out.q_score = weight_total > 0.0 ? weighted_sum / weight_total : 0.0;

    if (urls.empty()) {
        out.grade = 'F';
        out.recommendations.push_back("No sources cited; cite authoritative references.");
    } else if (out.q_score < 0.3 || all_t4) {
        out.grade = 'F';
    } else if (out.q_score >= 0.75 && any_t1) {
        out.grade = 'A';
    } else if (out.q_score >= thresholds.b) {
        out.grade = 'B';
    } else if (out.q_score >= thresholds.c) {
        out.grade = 'C';
    } else {
        out.grade = 'D';
    }

    if (out.grade > 'B' && !urls.empty()) { // C, D or F
        out.recommendations.push_back(
            "Add government data or first-party platform documentation to strengthen claims.");
        if (all_t4) {
            out.recommendations.push_back(
                "All sources are entirely unknown; replace them with recognized outlets.");
        }
    }
    return out;
}

} // namespace jade
