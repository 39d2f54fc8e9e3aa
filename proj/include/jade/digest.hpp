#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace jade {

/// FNV-1a 64-bit. Not cryptographic; used for audit-trail digests and
/// mock-script keys where only determinism matters.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

/// Lowercase 16-hex-digit rendering of fnv1a64.
inline std::string hex_digest(std::string_view data) {
    static constexpr char digits[] = "0123456789abcdef";
    std::uint64_t hash = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
        hash >>= 4;
    }
    return out;
}

} // namespace jade
