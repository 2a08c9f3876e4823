#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "cabba/tesla.hpp"

namespace cabba {

// Fixed-width raw encodings: 256-bit public keys, 512-bit signatures.
// The concrete scheme is Ed25519, which fits both widths exactly and
// signs deterministically (keys and signatures are reproducible from a
// seed, which the CLI determinism contract needs).
using PublicKey256 = std::array<std::uint8_t, 32>;
using Signature512 = std::array<std::uint8_t, 64>;
using SignSeed = std::array<std::uint8_t, 32>;
using SecretKey = std::array<std::uint8_t, 64>;

struct KeyPair {
    PublicKey256 pub;
    SecretKey sec;
};

KeyPair keypair_from_seed(const SignSeed& seed);

Signature512 sign_message(const SecretKey& sec, const std::uint8_t* msg, std::size_t len);
bool verify_message(const PublicKey256& pub, const Signature512& sig,
                    const std::uint8_t* msg, std::size_t len);

struct CertAuthority {
    KeyPair keys;
    static CertAuthority from_seed(const SignSeed& seed);
};

struct AircraftIdentity {
    std::uint32_t icao = 0;       // 24-bit address
    KeyPair keys;                 // aircraft signing keypair
    Signature512 certificate{};   // CA signature over the public key
};

// Certificate = Sign(K_privCA, K_pubA). v1 checks it against the
// receiver's trusted CA key.
Signature512 issue_certificate(const CertAuthority& ca, const PublicKey256& aircraft_pub);
AircraftIdentity make_identity(const CertAuthority& ca, std::uint32_t icao, const SignSeed& seed);

// v2 source: aircraft signature over a 128-bit interval key.
Signature512 sign_interval_key(const SecretKey& aircraft_sec, const Key128& interval_key);

// v1 = Verify(K_pubCA, cert, K_pubA)
bool verify_certificate(const PublicKey256& ca_pub, const Signature512& cert,
                        const PublicKey256& aircraft_pub);
// v2 = Verify(K_pubA, sig, K_i)
bool verify_interval_key(const PublicKey256& aircraft_pub, const Signature512& sig,
                         const Key128& interval_key);

std::string pubkey_to_hex(const PublicKey256& k);
PublicKey256 pubkey_from_hex(const std::string& hex);
std::string sig_to_hex(const Signature512& s);
Signature512 sig_from_hex(const std::string& hex);

}  // namespace cabba
