#pragma once

#include "jade/checklist.hpp"
#include "jade/digest.hpp"
#include "jade/errors.hpp"
#include "jade/json_util.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace jade {

/// One backend role in the run config. type "mock" replays a script
/// file; type "http" speaks the generic chat-completion contract.
struct BackendEntry {
    std::string type = "mock";
    std::string backend_id;
    std::string script; // mock: path to the script file
    std::string base_url;
    std::string model_name;
    std::string api_key_env;
    std::string completion_path = "/v1/chat/completions";
    int timeout_seconds = 60;
    int max_retries = 3;
};

struct RunConfig {
    int replicates = 3;
    double tau = 0.5;
    WeightPolicy weights;
    ChecklistBounds bounds;
    std::string tokenizer = "whitespace";
    int tool_budget = 5;
    std::string current_date = "1970-01-01";
    /// "system" or "fixed:<unix-seconds>"; fixed clocks make runs
    /// byte-reproducible.
    std::string clock = "fixed:0";

    std::string skill_library_path;
    std::string tier_table_path; // empty: built-in table
    std::string dataset_path;
    std::string reports_dir;
    std::string output_dir = "out";

    BackendEntry generator;
    BackendEntry judge;
    BackendEntry verifier;
    std::string tools_script; // mock tool suite script path

    /// Stable run identity: digest of the evaluation-relevant settings.
    /// Paths (which vary by machine and output location) are excluded so
    /// identical runs written to different directories share an id.
    std::string run_id() const { return hex_digest(identity_json().dump()); }

    nlohmann::ordered_json identity_json() const {
        nlohmann::ordered_json j;
        j["replicates"] = replicates;
        j["tau"] = tau;
        j["weights"] = {{"positive", weights.positive}, {"negative", weights.negative}};
        j["tokenizer"] = tokenizer;
        j["tool_budget"] = tool_budget;
        j["current_date"] = current_date;
        j["clock"] = clock;
        j["backends"] = {{"generator", generator.backend_id + ":" + generator.type},
                         {"judge", judge.backend_id + ":" + judge.type},
                         {"verifier", verifier.backend_id + ":" + verifier.type}};
        return j;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["replicates"] = replicates;
        j["tau"] = tau;
        j["weights"] = {{"positive", weights.positive}, {"negative", weights.negative}};
        j["tokenizer"] = tokenizer;
        j["tool_budget"] = tool_budget;
        j["current_date"] = current_date;
        j["clock"] = clock;
        j["skill_library"] = skill_library_path;
        j["tier_table"] = tier_table_path;
        j["dataset"] = dataset_path;
        j["reports_dir"] = reports_dir;
        j["output_dir"] = output_dir;
        auto backend_json = [](const BackendEntry& b) {
            nlohmann::ordered_json e;
            e["type"] = b.type;
            e["backend_id"] = b.backend_id;
            if (!b.script.empty()) e["script"] = b.script;
            if (!b.base_url.empty()) e["base_url"] = b.base_url;
            if (!b.model_name.empty()) e["model_name"] = b.model_name;
            if (!b.api_key_env.empty()) e["api_key_env"] = b.api_key_env;
            return e;
        };
        j["backends"] = {{"generator", backend_json(generator)},
                         {"judge", backend_json(judge)},
                         {"verifier", backend_json(verifier)}};
        j["tools_script"] = tools_script;
        return j;
    }
};

namespace detail {

inline BackendEntry parse_backend_entry(const nlohmann::json& j, const std::string& role) {
    BackendEntry entry;
    entry.backend_id = role;
    if (j.contains("type")) entry.type = j["type"].get<std::string>();
    if (entry.type != "mock" && entry.type != "http") {
        throw ConfigError("backend '" + role + "': unknown type '" + entry.type + "'");
    }
    if (j.contains("backend_id")) entry.backend_id = j["backend_id"].get<std::string>();
    if (j.contains("script")) entry.script = j["script"].get<std::string>();
    if (j.contains("base_url")) entry.base_url = j["base_url"].get<std::string>();
    if (j.contains("model_name")) entry.model_name = j["model_name"].get<std::string>();
    if (j.contains("api_key_env")) entry.api_key_env = j["api_key_env"].get<std::string>();
    if (j.contains("completion_path")) {
        entry.completion_path = j["completion_path"].get<std::string>();
    }
    if (j.contains("timeout_seconds")) entry.timeout_seconds = j["timeout_seconds"].get<int>();
    if (j.contains("max_retries")) entry.max_retries = j["max_retries"].get<int>();
    if (entry.type == "mock" && entry.script.empty()) {
        throw ConfigError("backend '" + role + "': mock backends need a script path");
    }
    if (entry.type == "http" && entry.base_url.empty()) {
        throw ConfigError("backend '" + role + "': http backends need a base_url");
    }
    return entry;
}

/// Paths inside a config file resolve relative to the file's directory.
inline std::string resolve_path(const std::string& base_dir, const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute() || base_dir.empty()) return path;
    return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

} // namespace detail

inline RunConfig load_run_config(const std::string& text, const std::string& base_dir = {}) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    RunConfig cfg;
    if (doc.contains("replicates")) cfg.replicates = doc["replicates"].get<int>();
    if (cfg.replicates < 1) throw ConfigError("replicates must be >= 1");
    if (doc.contains("tau")) cfg.tau = doc["tau"].get<double>();
    if (doc.contains("weights")) {
        const auto& w = doc["weights"];
        if (w.contains("positive")) {
            cfg.weights.positive.clear();
            for (const auto& v : w["positive"]) cfg.weights.positive.push_back(v.get<double>());
        }
        if (w.contains("negative")) cfg.weights.negative = w["negative"].get<double>();
    }
    if (doc.contains("tokenizer")) cfg.tokenizer = doc["tokenizer"].get<std::string>();
    if (cfg.tokenizer != "whitespace") {
        throw ConfigError("unknown tokenizer '" + cfg.tokenizer + "'");
    }
    if (doc.contains("tool_budget")) cfg.tool_budget = doc["tool_budget"].get<int>();
    if (cfg.tool_budget < 1) throw ConfigError("tool_budget must be >= 1");
    if (doc.contains("current_date")) cfg.current_date = doc["current_date"].get<std::string>();
    if (doc.contains("clock")) cfg.clock = doc["clock"].get<std::string>();
    if (doc.contains("skill_library")) {
        cfg.skill_library_path = detail::resolve_path(base_dir, doc["skill_library"].get<std::string>());
    }
    if (doc.contains("tier_table")) {
        cfg.tier_table_path = detail::resolve_path(base_dir, doc["tier_table"].get<std::string>());
    }
    if (doc.contains("dataset")) {
        cfg.dataset_path = detail::resolve_path(base_dir, doc["dataset"].get<std::string>());
    }
    if (doc.contains("reports_dir")) {
        cfg.reports_dir = detail::resolve_path(base_dir, doc["reports_dir"].get<std::string>());
    }
    if (doc.contains("output_dir")) {
        cfg.output_dir = detail::resolve_path(base_dir, doc["output_dir"].get<std::string>());
    }
    if (doc.contains("backends")) {
        const auto& backends = doc["backends"];
        if (backends.contains("generator")) {
            cfg.generator = detail::parse_backend_entry(backends["generator"], "generator");
            cfg.generator.script = detail::resolve_path(base_dir, cfg.generator.script);
        }
        if (backends.contains("judge")) {
            cfg.judge = detail::parse_backend_entry(backends["judge"], "judge");
            cfg.judge.script = detail::resolve_path(base_dir, cfg.judge.script);
        }
        if (backends.contains("verifier")) {
            cfg.verifier = detail::parse_backend_entry(backends["verifier"], "verifier");
            cfg.verifier.script = detail::resolve_path(base_dir, cfg.verifier.script);
        }
    }
    if (doc.contains("tools_script")) {
        cfg.tools_script = detail::resolve_path(base_dir, doc["tools_script"].get<std::string>());
    }
    return cfg;
}

inline RunConfig load_run_config_file(const std::string& path) {
    const std::string base_dir = std::filesystem::path(path).parent_path().string();
    return load_run_config(read_text_file(path), base_dir);
}

/// Referenced input paths must exist before a run starts.
inline void validate_config_paths(const RunConfig& cfg) {
    auto must_exist = [](const std::string& path, const char* what) {
        if (path.empty()) return;
        if (!std::filesystem::exists(path)) {
            throw ConfigError(std::string(what) + " path does not exist: " + path);
        }
    };
    must_exist(cfg.skill_library_path, "skill_library");
    must_exist(cfg.tier_table_path, "tier_table");
    must_exist(cfg.dataset_path, "dataset");
    must_exist(cfg.reports_dir, "reports_dir");
    must_exist(cfg.generator.script, "generator script");
    must_exist(cfg.judge.script, "judge script");
    must_exist(cfg.verifier.script, "verifier script");
    must_exist(cfg.tools_script, "tools script");
}

} // namespace jade
