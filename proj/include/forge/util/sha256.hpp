#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace forge::util {

// FIPS 180-4 SHA-256. Streaming interface so ROM images and bundles can
// be hashed without buffering; hex() finalizes.
class Sha256 {
public:
    Sha256();
    void update(const void* data, std::size_t len);
    void update(std::string_view s) { update(s.data(), s.size()); }
    // Lowercase hex digest; the object must not be reused afterwards.
    std::string hex();

private:
    void process_block(const std::uint8_t* block);

    std::uint32_t h_[8];
    std::uint8_t buf_[64];
    std::size_t buf_len_ = 0;
    std::uint64_t total_bits_ = 0;
};

std::string sha256_hex(std::string_view data);

} // namespace forge::util
