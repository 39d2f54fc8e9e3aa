#pragma once

#include "jade/digest.hpp"
#include "jade/errors.hpp"
#include "jade/json_util.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace jade {

enum class ToolKind { search, url_context };

inline const char* to_string(ToolKind tool) {
    return tool == ToolKind::search ? "search" : "url_context";
}

/// Grounding tools available to the verification agent.
class ToolSuite {
public:
    virtual ~ToolSuite() = default;
    virtual std::string search(const std::string& query) = 0;
    virtual std::string url_context(const std::string& url) = 0;
};

struct ToolCallRecord {
    ToolKind tool;
    std::string input;
    std::string output_digest;
    bool ok = true;
};

/// Per-claim budget enforcement and trace capture around a ToolSuite.
/// Failed calls still consume budget and are recorded.
class BudgetedTools {
public:
    BudgetedTools(ToolSuite& inner, int budget) : inner_(inner), budget_(budget) {
        if (budget_ < 1) throw ConfigError("tool budget must be >= 1");
    }

    std::string search(const std::string& query) { return call(ToolKind::search, query); }
    std::string url_context(const std::string& url) { return call(ToolKind::url_context, url); }

    const std::vector<ToolCallRecord>& trace() const { return trace_; }
    int remaining() const { return budget_ - used_; }

private:
    std::string call(ToolKind tool, const std::string& input) {
        if (used_ >= budget_) throw ToolBudgetExceeded(budget_);
        ++used_;
        try {
            std::string output = tool == ToolKind::search ? inner_.search(input)
                                                          : inner_.url_context(input);
            trace_.push_back({tool, input, hex_digest(output), true});
            return output;
        } catch (const ToolError& e) {
            trace_.push_back({tool, input, hex_digest(e.what()), false});
            throw;
        }
    }

    ToolSuite& inner_;
    int budget_;
    int used_ = 0;
    std::vector<ToolCallRecord> trace_;
};

/// Scripted tool suite for offline runs. Script shape:
///   {"search":      {"<query>": "result text" | {"error": "kind"}},
///    "url_context": {"<url>":   "page text"   | {"error": "not_found"}}}
/// Unscripted inputs throw ToolError("unscripted", ...): the mock never
/// improvises.
class MockToolSuite final : public ToolSuite {
public:
    explicit MockToolSuite(const nlohmann::json& script) {
        if (!script.is_object()) throw ConfigError("tool script must be a JSON object");
        load_section(script, "search", search_);
        load_section(script, "url_context", url_context_);
    }

    static MockToolSuite from_file(const std::string& path) {
        return MockToolSuite(nlohmann::json::parse(read_text_file(path)));
    }

    std::string search(const std::string& query) override { return lookup(search_, query); }
    std::string url_context(const std::string& url) override { return lookup(url_context_, url); }

private:
    struct Scripted {
        bool error = false;
        std::string text;
    };

    static void load_section(const nlohmann::json& script, const char* name,
                             std::map<std::string, Scripted>& out) {
        if (!script.contains(name)) return;
        for (const auto& [key, value] : script[name].items()) {
            if (value.is_string()) {
                out[key] = {false, value.get<std::string>()};
            } else if (value.is_object() && value.contains("error")) {
                out[key] = {true, value["error"].get<std::string>()};
            } else {
                throw ConfigError(std::string("tool script entry '") + key +
                                  "' must be a string or {\"error\": ...}");
            }
        }
    }

    static std::string lookup(const std::map<std::string, Scripted>& section,
                              const std::string& input) {
        auto it = section.find(input);
        if (it == section.end()) {
            throw ToolError("unscripted", "no scripted tool result for '" + input + "'");
        }
        if (it->second.error) {
            throw ToolError(it->second.text, "scripted tool failure '" + it->second.text +
                                                 "' for '" + input + "'");
        }
        return it->second.text;
    }

    std::map<std::string, Scripted> search_;
    std::map<std::string, Scripted> url_context_;
};

} // namespace jade
