#include "doctest.h"

#include "cabba/errors.hpp"
#include "cabba/pki.hpp"

using namespace cabba;

namespace {

SignSeed tseed(std::uint8_t b) {
    SignSeed s{};
    s.fill(b);
    return s;
}

}  // namespace

TEST_SUITE("pki") {

TEST_CASE("keypair derivation matches reference vector") {
    // Deterministic Ed25519 test vector: this seed/pubkey/signature set
    // is the standard empty-message check vector for the scheme.
    SignSeed seed{};
    {
        const std::string hex =
            "9d61b19deffd5a60ba844af492ec2cc44449c5697b326919703bac031cae7f60";
        for (std::size_t i = 0; i < 32; ++i)
            seed[i] = static_cast<std::uint8_t>(std::stoi(hex.substr(2 * i, 2), nullptr, 16));
    }
    KeyPair kp = keypair_from_seed(seed);
    CHECK(pubkey_to_hex(kp.pub) ==
          "d75a980182b10ab7d54bfed3c964073a0ee172f3daa62325af021a68f707511a");

    Signature512 sig = sign_message(kp.sec, nullptr, 0);
    CHECK(sig_to_hex(sig) ==
          "e5564300c360ac729086e2cc806e828a84877f1eb8e5d974d873e06522490155"
          "5fb8821590a33bacc61e39701cf9b46bd25bf5f0595bbe24655141438e7a100b");
    CHECK(verify_message(kp.pub, sig, nullptr, 0));
}

TEST_CASE("certificate covers the aircraft public key") {
    CertAuthority ca = CertAuthority::from_seed(tseed(1));
    AircraftIdentity id = make_identity(ca, 0x4840d6, tseed(2));
    CHECK(verify_certificate(ca.keys.pub, id.certificate, id.keys.pub));

    PublicKey256 other = id.keys.pub;
    other[0] ^= 1;
    CHECK_FALSE(verify_certificate(ca.keys.pub, id.certificate, other));

    CertAuthority rogue = CertAuthority::from_seed(tseed(3));
    CHECK_FALSE(verify_certificate(rogue.keys.pub, id.certificate, id.keys.pub));
}

TEST_CASE("interval key signatures verify under the aircraft key only") {
    CertAuthority ca = CertAuthority::from_seed(tseed(1));
    AircraftIdentity id = make_identity(ca, 0x4840d6, tseed(2));
    AircraftIdentity other = make_identity(ca, 0x4840d7, tseed(9));
    Key128 k = key_from_hex("000102030405060708090a0b0c0d0e0f");
    Signature512 sig = sign_interval_key(id.keys.sec, k);
    CHECK(verify_interval_key(id.keys.pub, sig, k));
    CHECK_FALSE(verify_interval_key(other.keys.pub, sig, k));
    Key128 k2 = k;
    k2[15] ^= 0x80;
    CHECK_FALSE(verify_interval_key(id.keys.pub, sig, k2));
}

TEST_CASE("identities are deterministic in the seed") {
    CertAuthority ca = CertAuthority::from_seed(tseed(7));
    AircraftIdentity a = make_identity(ca, 1, tseed(42));
    AircraftIdentity b = make_identity(ca, 1, tseed(42));
    CHECK(a.keys.pub == b.keys.pub);
    CHECK(a.certificate == b.certificate);
    AircraftIdentity c = make_identity(ca, 1, tseed(43));
    CHECK(a.keys.pub != c.keys.pub);
}

TEST_CASE("icao must fit 24 bits") {
    CertAuthority ca = CertAuthority::from_seed(tseed(1));
    CHECK_THROWS_AS(make_identity(ca, 0x1000000, tseed(2)), InvalidConfig);
}

TEST_CASE("hex round trips") {
    CertAuthority ca = CertAuthority::from_seed(tseed(5));
    CHECK(pubkey_from_hex(pubkey_to_hex(ca.keys.pub)) == ca.keys.pub);
    Signature512 sig = sign_interval_key(ca.keys.sec, Key128{});
    CHECK(sig_from_hex(sig_to_hex(sig)) == sig);
    CHECK_THROWS_AS(pubkey_from_hex("abc"), InvalidConfig);
}

}
