#include "cabba/pki.hpp"

#include <sodium.h>

#include <algorithm>

#include "cabba/digest.hpp"
#include "cabba/errors.hpp"

namespace cabba {

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> array_from_hex(const std::string& hex) {
    if (hex.size() != N * 2)
        throw InvalidConfig("hex string has wrong length");
    BitVec b = BitVec::from_hex(hex, N * 8);
    auto bytes = b.to_bytes();
    std::array<std::uint8_t, N> out;
    std::copy(bytes.begin(), bytes.end(), out.begin());
    return out;
}

template <std::size_t N>
std::string array_to_hex(const std::array<std::uint8_t, N>& a) {
    return BitVec::from_bytes(a.data(), N * 8).to_hex();
}

}  // namespace

KeyPair keypair_from_seed(const SignSeed& seed) {
    crypto_init();
    KeyPair kp;
    crypto_sign_seed_keypair(kp.pub.data(), kp.sec.data(), seed.data());
    return kp;
}

Signature512 sign_message(const SecretKey& sec, const std::uint8_t* msg, std::size_t len) {
    crypto_init();
    Signature512 sig;
    crypto_sign_detached(sig.data(), nullptr, msg, len, sec.data());
    return sig;
}

bool verify_message(const PublicKey256& pub, const Signature512& sig,
                    const std::uint8_t* msg, std::size_t len) {
    crypto_init();
    return crypto_sign_verify_detached(sig.data(), msg, len, pub.data()) == 0;
}

CertAuthority CertAuthority::from_seed(const SignSeed& seed) {
    return CertAuthority{keypair_from_seed(seed)};
}

Signature512 issue_certificate(const CertAuthority& ca, const PublicKey256& aircraft_pub) {
    return sign_message(ca.keys.sec, aircraft_pub.data(), aircraft_pub.size());
}

AircraftIdentity make_identity(const CertAuthority& ca, std::uint32_t icao, const SignSeed& seed) {
    if (icao > 0xFFFFFF)
        throw InvalidConfig("icao must fit 24 bits");
    AircraftIdentity id;
    id.icao = icao;
    id.keys = keypair_from_seed(seed);
    id.certificate = issue_certificate(ca, id.keys.pub);
    return id;
}

Signature512 sign_interval_key(const SecretKey& aircraft_sec, const Key128& interval_key) {
    return sign_message(aircraft_sec, interval_key.data(), interval_key.size());
}

bool verify_certificate(const PublicKey256& ca_pub, const Signature512& cert,
                        const PublicKey256& aircraft_pub) {
    return verify_message(ca_pub, cert, aircraft_pub.data(), aircraft_pub.size());
}

bool verify_interval_key(const PublicKey256& aircraft_pub, const Signature512& sig,
                         const Key128& interval_key) {
    return verify_message(aircraft_pub, sig, interval_key.data(), interval_key.size());
}

std::string pubkey_to_hex(const PublicKey256& k) { return array_to_hex(k); }
PublicKey256 pubkey_from_hex(const std::string& hex) { return array_from_hex<32>(hex); }
std::string sig_to_hex(const Signature512& s) { return array_to_hex(s); }
Signature512 sig_from_hex(const std::string& hex) { return array_from_hex<64>(hex); }

}  // namespace cabba
