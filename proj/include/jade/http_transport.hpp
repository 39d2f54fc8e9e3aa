#pragma once

#include "jade/backend.hpp"
#include "jade/errors.hpp"

#include <httplib.h>

#include <string>

namespace jade {

/// Default transport backed by cpp-httplib. Split from backend.hpp so
/// test binaries that only need mocks never touch sockets.
inline HttpTransport httplib_transport() {
    return [](const HttpRequestData& request) -> HttpResponseData {
        const auto scheme_end = request.url.find("://");
        if (scheme_end == std::string::npos) {
            throw BackendError(BackendError::Kind::transport,
                               "base_url must include a scheme: " + request.url);
        }
        const auto path_start = request.url.find('/', scheme_end + 3);
        const std::string origin =
            path_start == std::string::npos ? request.url : request.url.substr(0, path_start);
        const std::string path =
            path_start == std::string::npos ? "/" : request.url.substr(path_start);

        httplib::Client client(origin);
        client.set_connection_timeout(request.timeout_seconds, 0);
        client.set_read_timeout(request.timeout_seconds, 0);

        httplib::Headers headers;
        std::string content_type = "application/json";
        for (const auto& [name, value] : request.headers) {
            if (name == "Content-Type") {
                content_type = value;
            } else {
                headers.emplace(name, value);
            }
        }

        auto result = client.Post(path, headers, request.body, content_type);
        if (!result) {
            if (result.error() == httplib::Error::ConnectionTimeout ||
                result.error() == httplib::Error::Read) {
                throw BackendError(BackendError::Kind::timeout, "request timed out");
            }
            return HttpResponseData{0, ""};
        }
        return HttpResponseData{result->status, result->body};
    };
}

} // namespace jade
