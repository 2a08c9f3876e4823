#include "doctest.h"

#include <algorithm>

#include "cabba/errors.hpp"
#include "cabba/protocol.hpp"
#include "cabba/receiver.hpp"

using namespace cabba;

namespace {

constexpr std::uint32_t kIcao = 0x4840d6;

SignSeed seed_of(std::uint8_t b) {
    SignSeed s{};
    s.fill(b);
    return s;
}

Key128 chain_seed(std::uint8_t b) {
    Key128 k{};
    k.fill(b);
    return k;
}

struct World {
    CertAuthority ca = CertAuthority::from_seed(seed_of(0xc1));
    TeslaConfig tcfg{20, 5.0, 196};
    KeyChain chain = generate_chain(chain_seed(0x55), tcfg);
    AircraftIdentity id = make_identity(ca, kIcao, seed_of(0xa7));
    Transmitter tx{id, chain, tcfg};
    ReceiverConfig rcfg;

    World() { rcfg.ca_pub = ca.keys.pub; }
    ReceiverContext rx() const { return ReceiverContext(kIcao, rcfg); }
};

AdsbFrame squitter(std::uint64_t me) { return make_df17(kIcao, me); }

int rank(RxState s) {
    switch (s) {
        case RxState::S0: return 0;
        case RxState::S1: return 1;
        case RxState::S2: return 2;
        case RxState::S3: return 2;
        case RxState::S4: return 3;
    }
    return -1;
}

}  // namespace

TEST_SUITE("receiver") {

TEST_CASE("transmitter drives disclosure and the mac sequence") {
    World w;
    FrameA a0 = w.tx.make_a(squitter(1), 4);
    FrameA a1 = w.tx.make_a(squitter(2), 4);
    FrameA a2 = w.tx.make_a(squitter(3), 5);
    CHECK(a0.seq == 0);
    CHECK(a1.seq == 1);
    CHECK(a2.seq == 0);  // counter resets each interval
    CHECK(a0.mac_bits.size() == 196);

    FrameB1 b1 = w.tx.make_b1(4);
    CHECK(b1.interval == 3);
    CHECK(b1.key == w.chain.key(3));
    FrameB2 b2 = w.tx.make_b2(4);
    CHECK(b2.key == b1.key);
    CHECK(verify_interval_key(w.id.keys.pub, b2.sig, b2.key));
    FrameC c = w.tx.make_c();
    CHECK(verify_certificate(w.ca.keys.pub, c.sig, c.pubkey));

    CHECK_THROWS_AS(w.tx.make_b1(0), InvalidOrder);
    CHECK_THROWS_AS(w.tx.make_b1(21), IndexOutOfRange);
    CHECK_THROWS_AS(w.tx.make_a(squitter(9), 21), IndexOutOfRange);

    CodecConfig codec;
    codec.mac_len_bits = 64;
    CHECK_THROWS_AS(Transmitter(w.id, w.chain, w.tcfg, codec), InvalidConfig);
}

TEST_CASE("ladder positions per frame type") {
    World w;

    ReceiverContext r1 = w.rx();
    CHECK(r1.state() == RxState::S0);
    r1.ingest(Frame{w.tx.make_b1(1)}, 1);
    CHECK(r1.state() == RxState::S1);
    r1.ingest(Frame{w.tx.make_b2(2)}, 2);
    CHECK(r1.state() == RxState::S2);
    r1.ingest(Frame{w.tx.make_c()}, 2);
    CHECK(r1.state() == RxState::S4);  // cert + signed key both verify

    ReceiverContext r2 = w.rx();
    r2.ingest(Frame{w.tx.make_c()}, 1);
    CHECK(r2.state() == RxState::S3);
    r2.ingest(Frame{w.tx.make_b2(2)}, 2);
    CHECK(r2.state() == RxState::S4);
}

TEST_CASE("rank never descends") {
    World w;
    ReceiverContext rx = w.rx();
    int last = rank(rx.state());
    std::vector<Frame> script{
        Frame{w.tx.make_b2(2)}, Frame{w.tx.make_b1(3)}, Frame{w.tx.make_c()},
        Frame{w.tx.make_b1(4)}, Frame{w.tx.make_c()},   Frame{w.tx.make_b2(5)},
    };
    std::uint32_t t = 2;
    for (const Frame& f : script) {
        rx.ingest(f, t++);
        CHECK(rank(rx.state()) >= last);
        last = rank(rx.state());
    }
    CHECK(rx.state() == RxState::S4);
}

TEST_CASE("bad certificate blocks authentication") {
    World w;
    CertAuthority rogue = CertAuthority::from_seed(seed_of(0xee));
    AircraftIdentity fake = make_identity(rogue, kIcao, seed_of(0xa7));
    Transmitter faketx{fake, w.chain, w.tcfg};

    ReceiverContext rx = w.rx();
    rx.ingest(Frame{faketx.make_c()}, 1);
    CHECK(rx.state() == RxState::S3);
    rx.ingest(Frame{faketx.make_b2(2)}, 2);
    CHECK(rx.state() == RxState::S3);  // v1 fails, never S4
    for (const KeyStream& s : rx.streams()) CHECK(s.verdict != StreamVerdict::authenticated);
}

TEST_CASE("bad key signature blocks authentication") {
    World w;
    ReceiverContext rx = w.rx();
    rx.ingest(Frame{w.tx.make_c()}, 1);
    FrameB2 b2 = w.tx.make_b2(2);
    b2.sig[0] ^= 0xff;
    rx.ingest(Frame{b2}, 2);
    CHECK(rx.state() == RxState::S3);
}

TEST_CASE("disclosure settles buffered messages") {
    World w;
    ReceiverContext rx = w.rx();
    FrameA a = w.tx.make_a(squitter(0x11), 1);
    std::vector<VerdictUpdate> up = rx.ingest(Frame{a}, 1);
    CHECK(up.empty());
    CHECK(rx.pending_count() == 1);

    up = rx.ingest(Frame{w.tx.make_b1(2)}, 2);
    REQUIRE(up.size() == 1);
    CHECK(up[0].integrity == Integrity::ok);
    CHECK(up[0].interval == 1);
    CHECK(up[0].seq == a.seq);
    CHECK_FALSE(up[0].authenticated_origin);  // stream not yet authenticated
    CHECK_FALSE(up[0].duplicate);
    CHECK(up[0].stream_id.has_value());
    CHECK(rx.pending_count() == 0);
    CHECK(rx.state() == RxState::S1);
}

TEST_CASE("keys derive downward for older intervals") {
    World w;
    ReceiverContext rx = w.rx();
    rx.ingest(Frame{w.tx.make_a(squitter(0x21), 1)}, 1);
    rx.ingest(Frame{w.tx.make_a(squitter(0x22), 2)}, 2);
    CHECK(rx.pending_count() == 2);
    // Disclosing K_3 covers intervals 1 and 2 by hashing down the chain.
    std::vector<VerdictUpdate> up = rx.ingest(Frame{w.tx.make_b1(4)}, 4);
    REQUIRE(up.size() == 2);
    for (const VerdictUpdate& u : up) CHECK(u.integrity == Integrity::ok);
    CHECK(rx.pending_count() == 0);
}

TEST_CASE("tampered message fails once disclosed and expires failed") {
    World w;
    ReceiverContext rx = w.rx();
    FrameA a = w.tx.make_a(squitter(0x31), 1);
    a.adsb[6] ^= 0x04;  // corrupt the carrier after the mac was computed
    rx.ingest(Frame{a}, 1);
    rx.ingest(Frame{w.tx.make_b1(2)}, 2);  // key arrives, mac check fails
    CHECK(rx.pending_count() == 1);

    std::vector<VerdictUpdate> up = rx.ingest(Frame{w.tx.make_b1(5)}, 5);
    bool saw = false;
    for (const VerdictUpdate& u : up) {
        if (u.interval == 1) {
            saw = true;
            CHECK(u.integrity == Integrity::failed);
            CHECK(u.expired);
        }
    }
    CHECK(saw);
    CHECK(rx.pending_count() == 0);
}

TEST_CASE("undisclosed messages expire unknown at the horizon") {
    World w;
    ReceiverContext rx = w.rx();
    rx.ingest(Frame{w.tx.make_a(squitter(0x41), 2)}, 2);
    // horizon 3: alive while max - 2 <= 3
    std::vector<VerdictUpdate> up = rx.ingest(Frame{w.tx.make_a(squitter(0x42), 5)}, 5);
    CHECK(up.empty());
    CHECK(rx.pending_count() == 2);
    up = rx.ingest(Frame{w.tx.make_a(squitter(0x43), 6)}, 6);
    REQUIRE(up.size() == 1);
    CHECK(up[0].interval == 2);
    CHECK(up[0].integrity == Integrity::unknown);
    CHECK(up[0].expired);
    CHECK(rx.pending_count() == 2);
}

TEST_CASE("repeated messages are flagged as duplicates") {
    World w;
    ReceiverContext rx = w.rx();
    FrameA a = w.tx.make_a(squitter(0x51), 1);
    rx.ingest(Frame{a}, 1);
    rx.ingest(Frame{a}, 1);  // replayed copy, same seq
    std::vector<VerdictUpdate> up = rx.ingest(Frame{w.tx.make_b1(2)}, 2);
    REQUIRE(up.size() == 2);
    CHECK_FALSE(up[0].duplicate);
    CHECK(up[1].duplicate);
    CHECK(up[0].integrity == Integrity::ok);
    CHECK(up[1].integrity == Integrity::ok);
}

TEST_CASE("a second chain under one address marks impostors") {
    World w;
    ReceiverContext rx = w.rx();
    rx.ingest(Frame{w.tx.make_b1(1)}, 1);
    REQUIRE(rx.streams().size() == 1);
    CHECK(rx.streams()[0].verdict == StreamVerdict::unverified);

    KeyChain other = generate_chain(chain_seed(0x99), w.tcfg);
    FrameB1 forged{kIcao, 0, other.key(0)};
    rx.ingest(Frame{forged}, 1);
    REQUIRE(rx.streams().size() == 2);
    for (const KeyStream& s : rx.streams())
        CHECK(s.verdict == StreamVerdict::impostor_candidate);

    rx.ingest(Frame{w.tx.make_c()}, 2);
    rx.ingest(Frame{w.tx.make_b2(2)}, 2);
    CHECK(rx.state() == RxState::S4);
    bool genuine_ok = false, forged_flagged = false;
    for (const KeyStream& s : rx.streams()) {
        if (s.verdict == StreamVerdict::authenticated) genuine_ok = true;
        if (s.verdict == StreamVerdict::impostor_candidate) forged_flagged = true;
    }
    CHECK(genuine_ok);
    CHECK(forged_flagged);
}

TEST_CASE("authentication upgrades already settled messages") {
    World w;
    ReceiverContext rx = w.rx();
    FrameA a = w.tx.make_a(squitter(0x61), 1);
    rx.ingest(Frame{a}, 1);
    rx.ingest(Frame{w.tx.make_b1(2)}, 2);
    REQUIRE(rx.settled().size() == 1);
    CHECK_FALSE(rx.settled()[0].authenticated_origin);

    rx.ingest(Frame{w.tx.make_c()}, 2);
    std::vector<VerdictUpdate> up = rx.ingest(Frame{w.tx.make_b2(3)}, 3);
    bool upgraded = false;
    for (const VerdictUpdate& u : up)
        if (u.interval == 1 && u.seq == a.seq && u.authenticated_origin) upgraded = true;
    CHECK(upgraded);
    CHECK(rx.settled()[0].authenticated_origin);

    // Messages settling after S4 carry the origin flag immediately.
    FrameA later = w.tx.make_a(squitter(0x62), 3);
    rx.ingest(Frame{later}, 3);
    up = rx.ingest(Frame{w.tx.make_b1(4)}, 4);
    REQUIRE(up.size() == 1);
    CHECK(up[0].integrity == Integrity::ok);
    CHECK(up[0].authenticated_origin);
}

TEST_CASE("foreign icao frames are rejected without side effects") {
    World w;
    ReceiverContext rx = w.rx();
    AircraftIdentity other_id = make_identity(w.ca, 0x123456, seed_of(0x33));
    Transmitter other{other_id, w.chain, w.tcfg};
    CHECK(rx.ingest(Frame{other.make_b1(1)}, 1).empty());
    CHECK(rx.ingest(Frame{other.make_c()}, 1).empty());
    CHECK(rx.state() == RxState::S0);
    CHECK(rx.streams().empty());
    CHECK(rx.current_interval() == 0);
}

TEST_CASE("chain walk bound limits linking and derivation") {
    World w;
    w.rcfg.max_chain_walk = 2;
    w.rcfg.buffer_horizon = 100;
    ReceiverContext rx = w.rx();
    rx.ingest(Frame{w.tx.make_a(squitter(0x71), 1)}, 1);
    FrameB1 far{kIcao, 10, w.chain.key(10)};
    rx.ingest(Frame{far}, 2);
    CHECK(rx.pending_count() == 1);  // walk of 9 exceeds the bound

    FrameB1 near{kIcao, 2, w.chain.key(2)};
    std::vector<VerdictUpdate> up = rx.ingest(Frame{near}, 2);
    REQUIRE(up.size() == 1);
    CHECK(up[0].integrity == Integrity::ok);
    // The two disclosures could not be linked either, so they split.
    CHECK(rx.streams().size() == 2);
}

TEST_CASE("static integrity check round trip") {
    World w;
    AdsbFrame adsb = squitter(0x77);
    AuthKey ak = derive_auth_key(w.chain.key(6), 6);
    MacTag tag = compute_mac(BitVec::from_bytes(adsb.data(), kAdsbFrameBits), ak, 3, 196);
    CHECK(ReceiverContext::check_integrity(adsb, tag.bits, 3, 6, w.chain.key(6)));
    CHECK_FALSE(ReceiverContext::check_integrity(adsb, tag.bits, 4, 6, w.chain.key(6)));
    CHECK_FALSE(ReceiverContext::check_integrity(adsb, tag.bits, 3, 7, w.chain.key(7)));
    CHECK_FALSE(ReceiverContext::check_integrity(adsb, tag.bits, 3, 6, w.chain.key(5)));
}

TEST_CASE("receiver rejects wide icao") {
    World w;
    CHECK_THROWS_AS(ReceiverContext(0x1000000, w.rcfg), InvalidConfig);
}

TEST_CASE("duplicate disclosures do not multiply streams") {
    World w;
    ReceiverContext rx = w.rx();
    rx.ingest(Frame{w.tx.make_b1(1)}, 1);
    rx.ingest(Frame{w.tx.make_b1(1)}, 1);
    rx.ingest(Frame{w.tx.make_b1(2)}, 2);
    rx.ingest(Frame{w.tx.make_b2(3)}, 3);
    CHECK(rx.streams().size() == 1);
    CHECK(rx.streams()[0].keys.size() == 3);  // intervals 0, 1, 2
    CHECK(rx.current_interval() == 3);
}

}
