#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cabba {

using Digest256 = std::array<std::uint8_t, 32>;

// Initializes libsodium once; safe to call repeatedly from any thread.
void crypto_init();

Digest256 sha256(const std::uint8_t* data, std::size_t len);
Digest256 sha256(const std::vector<std::uint8_t>& data);

// HMAC-SHA256 with arbitrary key length.
Digest256 hmac_sha256(const std::uint8_t* key, std::size_t key_len,
                      const std::uint8_t* msg, std::size_t msg_len);

}  // namespace cabba
