#pragma once

#include "jade/backend.hpp"
#include "jade/config.hpp"
#include "jade/http_transport.hpp"
#include "jade/pipeline.hpp"
#include "jade/tools.hpp"

#include <memory>

namespace jade {

namespace detail {

inline std::function<std::unique_ptr<LLMBackend>()> backend_maker(const BackendEntry& entry) {
    if (entry.type == "mock") {
        // Parse the script once; fresh replay state per instantiation.
        auto script = std::make_shared<nlohmann::json>(
            nlohmann::json::parse(read_text_file(entry.script)));
        const std::string id = entry.backend_id;
        return [script, id] { return std::make_unique<MockBackend>(*script, id); };
    }
    BackendConfig config;
    config.backend_id = entry.backend_id;
    config.base_url = entry.base_url;
    config.model_name = entry.model_name;
    config.api_key_env = entry.api_key_env;
    config.completion_path = entry.completion_path;
    config.timeout_seconds = entry.timeout_seconds;
    config.max_retries = entry.max_retries;
    return [config] { return std::make_unique<HttpBackend>(config, httplib_transport()); };
}

} // namespace detail

/// Builds per-evaluation backend constructors from the run config.
inline BackendFactory make_backend_factory(const RunConfig& cfg) {
    BackendFactory factory;
    factory.generator = detail::backend_maker(cfg.generator);
    factory.judge = detail::backend_maker(cfg.judge);
    factory.verifier = detail::backend_maker(cfg.verifier);
    if (cfg.tools_script.empty()) {
        throw ConfigError("tools_script is required (only the scripted tool suite is shipped)");
    }
    auto script =
        std::make_shared<nlohmann::json>(nlohmann::json::parse(read_text_file(cfg.tools_script)));
    factory.tools = [script] { return std::make_unique<MockToolSuite>(*script); };
    return factory;
}

} // namespace jade
