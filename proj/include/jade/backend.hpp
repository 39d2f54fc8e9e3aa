#pragma once

#include "jade/digest.hpp"
#include "jade/errors.hpp"
#include "jade/json_util.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace jade {

struct BackendConfig {
    std::string backend_id = "backend";
    std::string base_url;
    std::string model_name;
    /// Name of the environment variable holding the bearer token.
    /// Secrets are never read from config values directly.
    std::string api_key_env;
    std::string completion_path = "/v1/chat/completions";
    int timeout_seconds = 60;
    int max_retries = 3;
    int retry_base_delay_ms = 250;
};

/// A language-model completion client. `complete` retries transient
/// transport failures with exponential backoff; everything else is the
/// concrete client's business.
class LLMBackend {
public:
    virtual ~LLMBackend() = default;

    virtual std::string id() const = 0;

    std::string complete(const std::string& prompt) {
        if (prompt.empty()) throw BackendError(BackendError::Kind::transport, "empty prompt");
        last_retries_ = 0;
        const int max_retries = retry_limit();
        for (int attempt = 0;; ++attempt) {
            try {
                return do_complete(prompt);
            } catch (const BackendError& e) {
                const bool retryable = e.kind() == BackendError::Kind::transport ||
                                       e.kind() == BackendError::Kind::timeout;
                if (!retryable || attempt >= max_retries) {
                    if (retryable && attempt >= max_retries) {
                        throw BackendError(BackendError::Kind::exhausted,
                                           std::string("retries exhausted: ") + e.what());
                    }
                    throw;
                }
                ++last_retries_;
                const int delay = retry_base_delay_ms() * (1 << attempt);
                if (delay > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay));
            }
        }
    }

    /// Retries performed by the most recent complete() call.
    int last_retries() const { return last_retries_; }

protected:
    virtual std::string do_complete(const std::string& prompt) = 0;
    virtual int retry_limit() const { return 0; }
    virtual int retry_base_delay_ms() const { return 0; }

private:
    int last_retries_ = 0;
};

// ---------------------------------------------------------------------------
// HTTP client speaking the generic chat-completion contract.
// ---------------------------------------------------------------------------

struct HttpRequestData {
    std::string url;
    std::string body;
    std::vector<std::pair<std::string, std::string>> headers;
    int timeout_seconds = 60;
};

struct HttpResponseData {
    int status = 0;
    std::string body;
};

/// Transport indirection so the request/response mapping is testable
/// without sockets. The default transport (see http_transport.hpp) posts
/// via cpp-httplib.
using HttpTransport = std::function<HttpResponseData(const HttpRequestData&)>;

class HttpBackend final : public LLMBackend {
public:
    HttpBackend(BackendConfig config, HttpTransport transport)
        : config_(std::move(config)), transport_(std::move(transport)) {
        if (config_.base_url.empty()) {
            throw ConfigError("http backend '" + config_.backend_id + "' needs a base_url");
        }
    }

    std::string id() const override { return config_.backend_id; }
    const BackendConfig& config() const { return config_; }

protected:
    std::string do_complete(const std::string& prompt) override {
        nlohmann::ordered_json payload;
        payload["model"] = config_.model_name;
        payload["messages"] = nlohmann::json::array({
            {{"role", "user"}, {"content", prompt}},
        });

        HttpRequestData request;
        request.url = config_.base_url + config_.completion_path;
        request.body = payload.dump();
        request.timeout_seconds = config_.timeout_seconds;
        request.headers.emplace_back("Content-Type", "application/json");
        if (!config_.api_key_env.empty()) {
            const char* token = std::getenv(config_.api_key_env.c_str());
            if (!token || !*token) {
                throw BackendError(BackendError::Kind::auth,
                                   "environment variable " + config_.api_key_env + " is not set");
            }
            request.headers.emplace_back("Authorization", std::string("Bearer ") + token);
        }

        HttpResponseData response = transport_(request);
        if (response.status == 0) {
            throw BackendError(BackendError::Kind::transport, "connection failed");
        }
        if (response.status == 401 || response.status == 403) {
            throw BackendError(BackendError::Kind::auth,
                               "authentication rejected (" + std::to_string(response.status) + ")");
        }
        if (response.status == 408 || response.status == 504) {
            throw BackendError(BackendError::Kind::timeout,
                               "request timed out (" + std::to_string(response.status) + ")");
        }
        if (response.status >= 500 || response.status == 429) {
            throw BackendError(BackendError::Kind::transport,
                               "server error (" + std::to_string(response.status) + ")");
        }
        if (response.status != 200) {
            throw BackendError(BackendError::Kind::transport,
                               "unexpected status " + std::to_string(response.status));
        }

        try {
            const auto body = nlohmann::json::parse(response.body);
            return body.at("choices").at(0).at("message").at("content").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw BackendError(BackendError::Kind::transport,
                               std::string("malformed completion response: ") + e.what());
        }
    }

    int retry_limit() const override { return config_.max_retries; }
    int retry_base_delay_ms() const override { return config_.retry_base_delay_ms; }

private:
    BackendConfig config_;
    HttpTransport transport_;
};

// ---------------------------------------------------------------------------
// Deterministic scripted mock.
// ---------------------------------------------------------------------------

/// Script keys, tried in order:
///   1. the full prompt text, verbatim;
///   2. "digest:<hex>" where <hex> = hex_digest(prompt);
///   3. "contains:<a>&&<b>&&..." keys: every fragment must occur in the
///      prompt. Keys with more fragments are tried first (most specific
///      wins), ties break lexicographically.
/// A string value replays on every match; an array is a sequence consumed
/// one element per match. Unmatched or used-up lookups throw; the mock
/// never improvises.
class MockBackend final : public LLMBackend {
public:
    explicit MockBackend(const nlohmann::json& script, std::string backend_id = "mock")
        : backend_id_(std::move(backend_id)) {
        if (!script.is_object()) throw ConfigError("mock script must be a JSON object");
        for (const auto& [key, value] : script.items()) {
            Entry entry;
            if (value.is_string()) {
                entry.responses.push_back(value.get<std::string>());
            } else if (value.is_array()) {
                entry.sequence = true;
                for (const auto& r : value) entry.responses.push_back(r.get<std::string>());
            } else {
                throw ConfigError("mock script value for '" + key +
                                  "' must be a string or array of strings");
            }
            entries_[key] = std::move(entry);
            if (key.rfind("contains:", 0) == 0) {
                contains_keys_.push_back(key);
            }
        }
        std::sort(contains_keys_.begin(), contains_keys_.end(),
                  [](const std::string& a, const std::string& b) {
                      const auto fa = fragment_count(a);
                      const auto fb = fragment_count(b);
                      if (fa != fb) return fa > fb;
                      return a < b;
                  });
    }

    static MockBackend from_file(const std::string& path, std::string backend_id = "mock") {
        return MockBackend(nlohmann::json::parse(read_text_file(path)), std::move(backend_id));
    }

    std::string id() const override { return backend_id_; }

protected:
    std::string do_complete(const std::string& prompt) override {
        if (auto it = entries_.find(prompt); it != entries_.end()) return take(it->second, prompt);
        if (auto it = entries_.find("digest:" + hex_digest(prompt)); it != entries_.end()) {
            return take(it->second, prompt);
        }
        for (const auto& key : contains_keys_) {
            if (matches_fragments(key.substr(9), prompt)) return take(entries_[key], prompt);
        }
        throw BackendError(BackendError::Kind::script,
                           "exhausted-script: no scripted response for prompt digest " +
                               hex_digest(prompt));
    }

private:
    struct Entry {
        std::vector<std::string> responses;
        std::size_t next = 0;
        bool sequence = false;
    };

    static std::size_t fragment_count(const std::string& key) {
        std::size_t count = 1;
        for (std::size_t pos = key.find("&&"); pos != std::string::npos;
             pos = key.find("&&", pos + 2)) {
            ++count;
        }
        return count;
    }

    static bool matches_fragments(const std::string& fragments, const std::string& prompt) {
        std::size_t start = 0;
        while (start <= fragments.size()) {
            const auto sep = fragments.find("&&", start);
            const std::string part = fragments.substr(
                start, sep == std::string::npos ? std::string::npos : sep - start);
            if (!part.empty() && prompt.find(part) == std::string::npos) return false;
            if (sep == std::string::npos) break;
            start = sep + 2;
        }
        return true;
    }

    std::string take(Entry& entry, const std::string& prompt) {
        if (!entry.sequence) return entry.responses.front();
        if (entry.next >= entry.responses.size()) {
            throw BackendError(BackendError::Kind::script,
                               "exhausted-script: scripted responses used up for prompt digest " +
                                   hex_digest(prompt));
        }
        return entry.responses[entry.next++];
    }

    std::string backend_id_;
    std::map<std::string, Entry> entries_;
    std::vector<std::string> contains_keys_;
};

} // namespace jade
