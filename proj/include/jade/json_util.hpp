#pragma once

#include "jade/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

namespace jade {

/// Pulls the JSON payload out of a model response: tolerates markdown
/// code fences and prose before/after by slicing from the first '[' or
/// '{' to the matching end. Throws SchemaError when no payload parses.
inline nlohmann::json extract_json(const std::string& response) {
    const auto first = response.find_first_of("[{");
    if (first == std::string::npos) {
        throw SchemaError("response contains no JSON payload", response);
    }
    // Scan for the end of the balanced payload, skipping string literals.
    const char open = response[first];
    const char close = open == '[' ? ']' : '}';
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = first; i < response.size(); ++i) {
        const char c = response[i];
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (c == '\\') {
                escaped = true;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == open) {
            ++depth;
        } else if (c == close) {
            --depth;
            if (depth == 0) {
                const std::string payload = response.substr(first, i - first + 1);
                try {
                    return nlohmann::json::parse(payload);
                } catch (const nlohmann::json::parse_error& e) {
                    throw SchemaError(std::string("payload is not valid JSON: ") + e.what(),
                                      response);
                }
            }
        }
    }
    throw SchemaError("unterminated JSON payload", response);
}

/// Serializes a weight as an integer when it is integral, so canonical
/// output prints 15 rather than 15.0.
inline nlohmann::json number_as_json(double value) {
    const auto as_int = static_cast<std::int64_t>(value);
    if (static_cast<double>(as_int) == value) return nlohmann::json(as_int);
    return nlohmann::json(value);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace jade
