#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cabba/bits.hpp"

namespace cabba {

using Key128 = std::array<std::uint8_t, 16>;

Key128 key_from_hex(const std::string& hex);
std::string key_to_hex(const Key128& k);

// Delayed-disclosure broadcast authentication. One hash chain per flight:
// K_N is derived from a secret seed, K_{i-1} = F(K_i), and K_0 is the
// pledge. The MAC for interval i uses K_i' = F'(K_i); K_i itself is
// disclosed one interval later.
struct TeslaConfig {
    std::uint32_t chain_length = 720;  // N intervals
    double interval_s = 5.0;           // T_int
    int mac_len_bits = 196;            // lambda, leftmost HMAC bits

    static constexpr int kKeyBits = 128;
    static constexpr int kMacMinBits = 16;
    static constexpr int kMacMaxBits = 196;  // 204-bit sigma field minus 8-bit seq

    void validate() const;  // throws InvalidConfig / MacTooLong
};

class KeyChain {
public:
    KeyChain() = default;
    KeyChain(Key128 seed, std::vector<Key128> keys)
        : seed_(seed), keys_(std::move(keys)) {}

    std::uint32_t length() const { return static_cast<std::uint32_t>(keys_.size()) - 1; }
    const Key128& key(std::uint32_t interval) const;  // K_i, i in [0, N]
    const Key128& pledge() const { return keys_.front(); }
    const Key128& seed() const { return seed_; }

private:
    Key128 seed_{};
    std::vector<Key128> keys_;  // keys_[i] = K_i
};

struct AuthKey {
    Key128 key;               // K_i' = F'(K_i)
    std::uint32_t interval;   // i
};

struct MacTag {
    BitVec bits;              // lambda leftmost HMAC bits
    std::uint8_t seq = 0;     // per-interval sequence number s
    std::uint32_t interval = 0;
};

// F and F': SHA-256 truncated to 128 bits, domain-separated by a prefix
// byte (0x00 chain step, 0x01 auth-key derivation, 0x02 seed-to-head).
Key128 f_hash(const Key128& k);
Key128 f_hash_iter(const Key128& k, std::uint32_t times);
Key128 fprime_hash(const Key128& k);

KeyChain generate_chain(const Key128& seed, const TeslaConfig& cfg);

// True iff F^claimed_index(candidate) equals the pledge. claimed_index
// above max_index (caller-supplied hash-work bound, conventionally twice
// the configured chain length) throws IndexOutOfRange.
bool verify_pledge(const Key128& candidate, std::uint32_t claimed_index,
                   const Key128& pledge, std::uint32_t max_index);

AuthKey derive_auth_key(const Key128& interval_key, std::uint32_t interval);

// HMAC input is message || seq || interval (8-byte big-endian); the tag
// keeps the lambda leftmost bits. Message length must be a whole number
// of bytes.
MacTag compute_mac(const BitVec& message, const AuthKey& auth_key,
                   std::uint8_t seq, int mac_len_bits);

bool verify_mac(const BitVec& message, const MacTag& tag, const Key128& interval_key);

// True iff key_a (interval_a) and key_b (interval_b) lie on one chain:
// F^(interval_b - interval_a)(key_b) == key_a. Requires interval_b >
// interval_a, else throws InvalidOrder.
bool same_origin(const Key128& key_a, std::uint32_t interval_a,
                 const Key128& key_b, std::uint32_t interval_b);

}  // namespace cabba
