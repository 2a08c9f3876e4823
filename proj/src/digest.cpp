#include "cabba/digest.hpp"

#include <sodium.h>

#include <mutex>
#include <stdexcept>

namespace cabba {

void crypto_init() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0)
            throw std::runtime_error("libsodium initialization failed");
    });
}

Digest256 sha256(const std::uint8_t* data, std::size_t len) {
    crypto_init();
    Digest256 out;
    crypto_hash_sha256(out.data(), data, len);
    return out;
}

Digest256 sha256(const std::vector<std::uint8_t>& data) {
    return sha256(data.data(), data.size());
}

Digest256 hmac_sha256(const std::uint8_t* key, std::size_t key_len,
                      const std::uint8_t* msg, std::size_t msg_len) {
    crypto_init();
    crypto_auth_hmacsha256_state st;
    crypto_auth_hmacsha256_init(&st, key, key_len);
    crypto_auth_hmacsha256_update(&st, msg, msg_len);
    Digest256 out;
    crypto_auth_hmacsha256_final(&st, out.data());
    return out;
}

}  // namespace cabba
