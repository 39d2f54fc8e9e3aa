#pragma once

#include "jade/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

namespace jade {

/// Extracts the lowercased host from an absolute URL.
/// Accepts `scheme://[user@]host[:port][/path...]`.
/// Throws InvalidUrl when the scheme or host is missing or malformed.
inline std::string url_host(std::string_view url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string_view::npos || scheme_end == 0) {
        throw InvalidUrl(std::string(url));
    }
    for (char c : url.substr(0, scheme_end)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
            throw InvalidUrl(std::string(url));
        }
    }

    std::string_view rest = url.substr(scheme_end + 3);
    const auto path_start = rest.find_first_of("/?#");
    std::string_view authority = path_start == std::string_view::npos ? rest : rest.substr(0, path_start);

    if (const auto at = authority.rfind('@'); at != std::string_view::npos) {
        authority = authority.substr(at + 1);
    }
    if (const auto colon = authority.find(':'); colon != std::string_view::npos) {
        authority = authority.substr(0, colon);
    }
    if (authority.empty()) {
        throw InvalidUrl(std::string(url));
    }

    std::string host(authority);
    std::transform(host.begin(), host.end(), host.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (char c : host) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-') {
            throw InvalidUrl(std::string(url));
        }
    }
    if (host.front() == '.' || host.back() == '.') {
        throw InvalidUrl(std::string(url));
    }
    return host;
}

/// True when `host` equals `suffix` or ends with ".suffix" (label boundary).
inline bool host_matches_suffix(std::string_view host, std::string_view suffix) {
    if (host.size() < suffix.size()) return false;
    if (host == suffix) return true;
    return host.size() > suffix.size() &&
           host[host.size() - suffix.size() - 1] == '.' &&
           host.ends_with(suffix);
}

} // namespace jade
