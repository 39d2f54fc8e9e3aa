#pragma once

#include "jade/errors.hpp"
#include "jade/taxonomy.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jade {

/// One expert checkpoint inside a skill. Only `rule` is mandatory.
struct SkillHint {
    std::string rule;
    std::string reasoning;
    std::vector<std::string> require_items;
    std::vector<std::string> examples;
    std::vector<std::pair<std::string, std::string>> definitions;
};

struct Deliverable {
    std::string name;
    std::string description;
    std::vector<std::string> must_have;
};

/// An expert-authored evaluation principle attached to one taxonomy label.
struct Skill {
    TaxonomyLabel label;
    std::string name;
    std::string description;
    std::optional<Deliverable> primary_deliverable;
    std::vector<SkillHint> hints;
    std::vector<std::string> critical_flaws;
    /// Position in the library file; fixes composition order within a level.
    int declaration_index = 0;
};

namespace detail {

inline std::string skill_location(std::size_t index, const char* field) {
    return "skills[" + std::to_string(index) + "]." + field;
}

inline SkillHint parse_hint(const nlohmann::json& j, std::size_t skill_index, std::size_t hint_index) {
    const std::string where =
        "skills[" + std::to_string(skill_index) + "].hints[" + std::to_string(hint_index) + "]";
    if (!j.is_object() || !j.contains("rule") || !j["rule"].is_string()) {
        throw ParseError(where, "hint must be an object with a string 'rule'");
    }
    SkillHint hint;
    hint.rule = j["rule"].get<std::string>();
    if (hint.rule.empty()) throw ParseError(where, "hint rule must be non-empty");
    if (j.contains("reasoning")) hint.reasoning = j["reasoning"].get<std::string>();
    if (j.contains("require")) {
        for (const auto& r : j["require"]) hint.require_items.push_back(r.get<std::string>());
    }
    if (j.contains("examples")) {
        for (const auto& e : j["examples"]) hint.examples.push_back(e.get<std::string>());
    }
    if (j.contains("definitions")) {
        for (const auto& [key, value] : j["definitions"].items()) {
            hint.definitions.emplace_back(key, value.get<std::string>());
        }
    }
    return hint;
}

} // namespace detail

/// The full label→skill map. Total over the configured taxonomy,
/// read-only after load.
class SkillLibrary {
public:
    const std::string& version() const { return version_; }
    const std::vector<Skill>& skills() const { return skills_; }

    const Skill* find(const TaxonomyLabel& label) const {
        auto it = by_label_.find(label);
        return it == by_label_.end() ? nullptr : &skills_[it->second];
    }

    /// Parses the skill-library document and checks totality against
    /// `taxonomy`. Throws ParseError, MissingSkillForLabel, DuplicateSkill.
    static SkillLibrary load(const std::string& text, const Taxonomy& taxonomy) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("byte " + std::to_string(e.byte), e.what());
        }
        if (!doc.is_object() || !doc.contains("version") || !doc.contains("skills")) {
            throw ParseError("", "skill library must be an object with 'version' and 'skills'");
        }

        SkillLibrary lib;
        lib.version_ = doc["version"].is_string() ? doc["version"].get<std::string>()
                                                  : doc["version"].dump();
        const auto& entries = doc["skills"];
        if (!entries.is_array()) throw ParseError("skills", "must be an array");

        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& entry = entries[i];
            for (const char* field : {"label_level", "label_name", "name", "description", "hints"}) {
                if (!entry.contains(field)) {
                    throw ParseError(detail::skill_location(i, field), "missing required field");
                }
            }
            Skill skill;
            skill.label.level = label_level_from_string(entry["label_level"].get<std::string>());
            skill.label.name = entry["label_name"].get<std::string>();
            if (!taxonomy.contains(skill.label)) {
                throw UnknownLabel(skill.label.name, detail::skill_location(i, "label_name"));
            }
            skill.name = entry["name"].get<std::string>();
            skill.description = entry["description"].get<std::string>();
            skill.declaration_index = static_cast<int>(i);

            if (entry.contains("primary_deliverable")) {
                const auto& d = entry["primary_deliverable"];
                Deliverable deliverable;
                deliverable.name = d.value("name", std::string{});
                deliverable.description = d.value("description", std::string{});
                if (d.contains("must_have")) {
                    for (const auto& m : d["must_have"]) {
                        deliverable.must_have.push_back(m.get<std::string>());
                    }
                }
                skill.primary_deliverable = std::move(deliverable);
            }
            if (skill.label.level == LabelLevel::L1 && !skill.primary_deliverable) {
                throw ParseError(detail::skill_location(i, "primary_deliverable"),
                                 "L1 skill '" + skill.name + "' must carry a primary_deliverable");
            }

            const auto& hints = entry["hints"];
            if (!hints.is_array() || hints.empty()) {
                throw ParseError(detail::skill_location(i, "hints"),
                                 "at least one hint rule is required");
            }
            for (std::size_t h = 0; h < hints.size(); ++h) {
                skill.hints.push_back(detail::parse_hint(hints[h], i, h));
            }
            if (entry.contains("critical_flaws")) {
                for (const auto& flaw : entry["critical_flaws"]) {
                    skill.critical_flaws.push_back(flaw.get<std::string>());
                }
            }

            for (const auto& existing : lib.skills_) {
                if (existing.name == skill.name) throw DuplicateSkill(skill.name);
            }
            if (lib.by_label_.count(skill.label)) {
                throw ParseError(detail::skill_location(i, "label_name"),
                                 "label '" + skill.label.name + "' mapped twice");
            }
            lib.by_label_[skill.label] = lib.skills_.size();
            lib.skills_.push_back(std::move(skill));
        }

        for (const auto& label : taxonomy.all_labels()) {
            if (!lib.by_label_.count(label)) throw MissingSkillForLabel(label.name);
        }
        return lib;
    }

    static SkillLibrary load_file(const std::string& path, const Taxonomy& taxonomy) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError(path, "cannot open skill library file");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return load(buffer.str(), taxonomy);
    }

private:
    std::string version_;
    std::vector<Skill> skills_;
    std::map<TaxonomyLabel, std::size_t> by_label_;
};

/// Deterministic skill activation: maps a label set to its skills,
/// ordered L1 before L2 before L3, then by library declaration order.
/// Throws UnknownLabel for labels without a mapped skill.
inline std::vector<Skill> activate_skills(const std::vector<TaxonomyLabel>& labels,
                                          const SkillLibrary& lib) {
    std::vector<const Skill*> picked;
    for (const auto& label : labels) {
        const Skill* skill = lib.find(label);
        if (!skill) throw UnknownLabel(label.name, "activate_skills");
        if (std::find(picked.begin(), picked.end(), skill) == picked.end()) {
            picked.push_back(skill);
        }
    }
    std::sort(picked.begin(), picked.end(), [](const Skill* a, const Skill* b) {
        if (a->label.level != b->label.level) return a->label.level < b->label.level;
        return a->declaration_index < b->declaration_index;
    });

    std::vector<Skill> out;
    out.reserve(picked.size());
    for (const Skill* skill : picked) out.push_back(*skill);
    return out;
}

/// The rendered rubric fed into checklist generation. Rendering is
/// byte-stable for identical inputs.
struct ComposedRubric {
    std::string deliverable_check;
    std::string expert_hints;
    std::vector<std::string> activated;
};

inline constexpr const char* kNoDeliverableSentinel = "(no core deliverable specified)";
inline constexpr const char* kNoHintsSentinel = "(no expert checkpoints)";

inline ComposedRubric compose_rubric(const std::vector<Skill>& skills) {
    ComposedRubric rubric;

    std::ostringstream deliverables;
    bool any_deliverable = false;
    for (const auto& skill : skills) {
        if (skill.label.level != LabelLevel::L1 || !skill.primary_deliverable) continue;
        const auto& d = *skill.primary_deliverable;
        if (any_deliverable) deliverables << "\n";
        any_deliverable = true;
        deliverables << "## " << d.name << " (" << skill.name << ")\n";
        if (!d.description.empty()) deliverables << d.description << "\n";
        if (!d.must_have.empty()) {
            deliverables << "Must have:\n";
            for (const auto& item : d.must_have) deliverables << "- " << item << "\n";
        }
    }
    rubric.deliverable_check = any_deliverable ? deliverables.str() : kNoDeliverableSentinel;

    std::ostringstream hints;
    bool any_hint = false;
    for (const auto& skill : skills) {
        rubric.activated.push_back(skill.name);
        if (any_hint) hints << "\n";
        any_hint = true;
        hints << "## " << skill.name << " [" << to_string(skill.label.level) << "]\n";
        for (const auto& hint : skill.hints) {
            hints << "- " << hint.rule << "\n";
            if (!hint.reasoning.empty()) hints << "  Reasoning: " << hint.reasoning << "\n";
            for (const auto& req : hint.require_items) hints << "  Require: " << req << "\n";
            for (const auto& ex : hint.examples) hints << "  Example: " << ex << "\n";
            for (const auto& [term, meaning] : hint.definitions) {
                hints << "  Definition: " << term << " = " << meaning << "\n";
            }
        }
        for (const auto& flaw : skill.critical_flaws) {
            hints << "- Critical flaw: " << flaw << "\n";
        }
    }
    rubric.expert_hints = any_hint ? hints.str() : kNoHintsSentinel;
    return rubric;
}

} // namespace jade
