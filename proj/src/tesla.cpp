#include "cabba/tesla.hpp"

#include <algorithm>
#include <cstring>

#include "cabba/digest.hpp"
#include "cabba/errors.hpp"

namespace cabba {

namespace {

constexpr std::uint8_t kPrefixF = 0x00;
constexpr std::uint8_t kPrefixFPrime = 0x01;
constexpr std::uint8_t kPrefixHead = 0x02;

Key128 prefixed_trunc_hash(std::uint8_t prefix, const Key128& k) {
    std::uint8_t buf[17];
    buf[0] = prefix;
    std::memcpy(buf + 1, k.data(), k.size());
    Digest256 d = sha256(buf, sizeof buf);
    Key128 out;
    std::copy(d.begin(), d.begin() + out.size(), out.begin());
    return out;
}

}  // namespace

Key128 key_from_hex(const std::string& hex) {
    if (hex.size() != 32)
        throw InvalidConfig("key hex must be 32 characters");
    BitVec b = BitVec::from_hex(hex, 128);
    auto bytes = b.to_bytes();
    Key128 k;
    std::copy(bytes.begin(), bytes.end(), k.begin());
    return k;
}

std::string key_to_hex(const Key128& k) {
    return BitVec::from_bytes(k.data(), 128).to_hex();
}

void TeslaConfig::validate() const {
    if (chain_length == 0)
        throw InvalidConfig("chain_length must be at least 1");
    if (interval_s <= 0.0)
        throw InvalidConfig("interval_s must be positive");
    if (mac_len_bits > kMacMaxBits)
        throw MacTooLong("mac_len_bits exceeds the 196-bit sigma budget");
    if (mac_len_bits < kMacMinBits)
        throw InvalidConfig("mac_len_bits below minimum of 16");
}

const Key128& KeyChain::key(std::uint32_t interval) const {
    if (interval >= keys_.size())
        throw IndexOutOfRange("interval beyond chain length");
    return keys_[interval];
}

Key128 f_hash(const Key128& k) { return prefixed_trunc_hash(kPrefixF, k); }

Key128 f_hash_iter(const Key128& k, std::uint32_t times) {
    Key128 v = k;
    for (std::uint32_t i = 0; i < times; ++i) v = f_hash(v);
    return v;
}

Key128 fprime_hash(const Key128& k) { return prefixed_trunc_hash(kPrefixFPrime, k); }

KeyChain generate_chain(const Key128& seed, const TeslaConfig& cfg) {
    cfg.validate();
    std::vector<Key128> keys(cfg.chain_length + 1);
    keys[cfg.chain_length] = prefixed_trunc_hash(kPrefixHead, seed);
    for (std::uint32_t i = cfg.chain_length; i > 0; --i)
        keys[i - 1] = f_hash(keys[i]);
    return KeyChain(seed, std::move(keys));
}

bool verify_pledge(const Key128& candidate, std::uint32_t claimed_index,
                   const Key128& pledge, std::uint32_t max_index) {
    if (claimed_index > max_index)
        throw IndexOutOfRange("claimed interval index above hash-work bound");
    return f_hash_iter(candidate, claimed_index) == pledge;
}

AuthKey derive_auth_key(const Key128& interval_key, std::uint32_t interval) {
    return AuthKey{fprime_hash(interval_key), interval};
}

MacTag compute_mac(const BitVec& message, const AuthKey& auth_key,
                   std::uint8_t seq, int mac_len_bits) {
    if (mac_len_bits > TeslaConfig::kMacMaxBits)
        throw MacTooLong("mac_len_bits exceeds the 196-bit sigma budget");
    if (mac_len_bits < TeslaConfig::kMacMinBits)
        throw InvalidConfig("mac_len_bits below minimum of 16");
    if (message.size() % 8 != 0)
        throw AlignmentError("MAC message must be whole bytes");

    std::vector<std::uint8_t> buf = message.to_bytes();
    buf.push_back(seq);
    for (int i = 7; i >= 0; --i)
        buf.push_back(static_cast<std::uint8_t>(auth_key.interval >> (i * 8)));

    Digest256 full = hmac_sha256(auth_key.key.data(), auth_key.key.size(),
                                 buf.data(), buf.size());
    MacTag tag;
    tag.bits = BitVec::from_bytes(full.data(), mac_len_bits);
    tag.seq = seq;
    tag.interval = auth_key.interval;
    return tag;
}

bool verify_mac(const BitVec& message, const MacTag& tag, const Key128& interval_key) {
    AuthKey ak = derive_auth_key(interval_key, tag.interval);
    MacTag expect = compute_mac(message, ak, tag.seq, static_cast<int>(tag.bits.size()));
    return expect.bits == tag.bits;
}

bool same_origin(const Key128& key_a, std::uint32_t interval_a,
                 const Key128& key_b, std::uint32_t interval_b) {
    if (interval_b <= interval_a)
        throw InvalidOrder("same_origin requires interval_b > interval_a");
    return f_hash_iter(key_b, interval_b - interval_a) == key_a;
}

}  // namespace cabba
