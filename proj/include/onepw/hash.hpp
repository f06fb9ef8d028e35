#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "onepw/errors.hpp"

namespace onepw {

/// Lowercase hex of SHA-256(data), 64 chars.
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(std::string_view text);

/// Digest algorithm identifier. "sha256" is the production algorithm;
/// "sha256-t<L>" (1 <= L < 64) is SHA-256 truncated to its first L hex
/// characters, used for toy-scale moduli in tests and the attack lab.
class HashAlgo {
public:
    static HashAlgo sha256();
    static HashAlgo sha256_truncated(unsigned hex_len);
    static HashAlgo parse(std::string_view name);

    const std::string& name() const { return name_; }
    unsigned hex_len() const { return hex_len_; }

    /// Lowercase hex digest, exactly hex_len() chars.
    std::string digest_hex(std::string_view text) const;

    bool operator==(const HashAlgo& rhs) const { return name_ == rhs.name_; }
    bool operator!=(const HashAlgo& rhs) const { return !(*this == rhs); }

private:
    HashAlgo(std::string name, unsigned hex_len)
        : name_(std::move(name)), hex_len_(hex_len) {}

    std::string name_;
    unsigned hex_len_;
};

}  // namespace onepw
