#include "doctest.h"

#include "cabba/errors.hpp"
#include "cabba/frame.hpp"
#include "cabba/rng.hpp"

using namespace cabba;

namespace {

FrameA sample_a(int mac_len = 196) {
    FrameA a;
    a.adsb = make_df17(0x4840d6, 0x202cc371c32ce0ULL);
    Rng rng(11);
    for (int i = 0; i < mac_len; ++i) a.mac_bits.push_back(rng.bit());
    a.seq = 7;
    return a;
}

Key128 patterned_key() {
    Key128 k{};
    for (int i = 0; i < 16; ++i) k[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(17 * i + 3);
    return k;
}

Signature512 patterned_sig() {
    Signature512 s{};
    for (int i = 0; i < 64; ++i) s[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(5 * i + 1);
    return s;
}

PublicKey256 patterned_pub() {
    PublicKey256 p{};
    for (int i = 0; i < 32; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(9 * i + 2);
    return p;
}

// Flip all six bits of one RS symbol in the quadrature data region.
void smash_symbol(BitVec& q, int sym_idx) {
    for (int b = 0; b < 6; ++b) q.flip(static_cast<std::size_t>(kRefFieldBits + sym_idx * 6 + b));
}

}  // namespace

TEST_SUITE("frame") {

TEST_CASE("bit budgets and airtimes") {
    CHECK(in_phase_bits(FrameType::A) == 112);
    CHECK(in_phase_bits(FrameType::B1) == 112);
    CHECK(in_phase_bits(FrameType::B2) == 210);
    CHECK(in_phase_bits(FrameType::C) == 242);
    CHECK(frame_airtime_us(FrameType::A) == 120.0);
    CHECK(frame_airtime_us(FrameType::B1) == 120.0);
    CHECK(frame_airtime_us(FrameType::B2) == 218.0);
    CHECK(frame_airtime_us(FrameType::C) == 250.0);
}

TEST_CASE("type a packets keep the legacy frame verbatim") {
    FrameA a = sample_a();
    FramePackets pkt = encode_frame(Frame{a});
    CHECK(pkt.in_phase.to_hex() == "8d4840d6202cc371c32ce0576098");
    CHECK(pkt.quadrature.size() == 336);
    CHECK(pkt.quadrature.read_uint(0, 12) == 0);  // reference phase field

    FrameDecodeResult r = decode_frame(pkt.in_phase, pkt.quadrature);
    REQUIRE(r.ok());
    CHECK(r.corrected_symbols == 0);
    CHECK(std::get<FrameA>(*r.frame) == a);
}

TEST_CASE("round trips for every type") {
    FrameB1 b1{0xabcdef, 41, patterned_key()};
    FrameB2 b2{0x123456, 65535, patterned_key(), patterned_sig()};
    FrameC c{0x00a1b2, patterned_pub(), patterned_sig()};

    for (const Frame& f : {Frame{sample_a()}, Frame{b1}, Frame{b2}, Frame{c}}) {
        FramePackets pkt = encode_frame(f);
        CHECK(pkt.in_phase.size() == static_cast<std::size_t>(in_phase_bits(frame_type(f))));
        CHECK(pkt.quadrature.size() == pkt.in_phase.size() * 3);
        FrameDecodeResult r = decode_frame(pkt.in_phase, pkt.quadrature);
        REQUIRE(r.ok());
        CHECK(*r.frame == f);
        CHECK(frame_icao(*r.frame) == frame_icao(f));
    }
}

TEST_CASE("in-phase structure of overlay types") {
    FrameB1 b1{0xabcdef, 41, patterned_key()};
    FramePackets pkt = encode_frame(Frame{b1});
    CHECK(pkt.in_phase.read_uint(0, 5) == 25);
    CHECK(pkt.in_phase.read_uint(5, 3) == 0);
    CHECK(pkt.in_phase.read_uint(8, 24) == 0xabcdef);
    CHECK(crc24(pkt.in_phase) == 0);

    FrameB2 b2{0x123456, 9, patterned_key(), patterned_sig()};
    pkt = encode_frame(Frame{b2});
    CHECK(pkt.in_phase.read_uint(0, 5) == 26);
    CHECK(crc24(pkt.in_phase) == 0);

    FrameC c{0x00a1b2, patterned_pub(), patterned_sig()};
    pkt = encode_frame(Frame{c});
    CHECK(pkt.in_phase.read_uint(0, 5) == 27);
    CHECK(crc24(pkt.in_phase) == 0);
}

TEST_CASE("classification by length and type code") {
    CHECK(*classify_frame(encode_frame(Frame{sample_a()}).in_phase) == FrameType::A);
    FrameB1 b1{1, 0, patterned_key()};
    CHECK(*classify_frame(encode_frame(Frame{b1}).in_phase) == FrameType::B1);
    BitVec junk;
    junk.append_uint(3, 5);
    junk.append_zeros(107);
    CHECK_FALSE(classify_frame(junk).has_value());
    CHECK_FALSE(classify_frame(BitVec()).has_value());
}

TEST_CASE("crc damage is reported before rs decoding") {
    FramePackets pkt = encode_frame(Frame{sample_a()});
    pkt.in_phase.flip(40);
    FrameDecodeResult r = decode_frame(pkt.in_phase, pkt.quadrature);
    CHECK(r.status == DecodeStatus::crc_mismatch);
    CHECK_FALSE(r.frame.has_value());
}

TEST_CASE("quadrature symbol errors are corrected up to the budget") {
    FrameA a = sample_a();
    FramePackets pkt = encode_frame(Frame{a});
    for (int s : {0, 5, 11, 17, 23, 29, 33, 40, 45, 53}) smash_symbol(pkt.quadrature, s);
    FrameDecodeResult r = decode_frame(pkt.in_phase, pkt.quadrature);
    REQUIRE(r.ok());
    CHECK(r.corrected_symbols == 10);
    CHECK(std::get<FrameA>(*r.frame) == a);
}

TEST_CASE("excess quadrature damage is flagged uncorrectable") {
    FramePackets pkt = encode_frame(Frame{sample_a()});
    for (int s = 0; s < 13; ++s) smash_symbol(pkt.quadrature, 2 * s);
    FrameDecodeResult r = decode_frame(pkt.in_phase, pkt.quadrature);
    CHECK(r.status == DecodeStatus::rs_uncorrectable);
}

TEST_CASE("split-block types correct per-block budgets") {
    FrameB2 b2{0x123456, 100, patterned_key(), patterned_sig()};
    FramePackets pkt = encode_frame(Frame{b2});
    // First block holds 43 data symbols with 9 parity (4 correctable),
    // second 43 with 8 (4 correctable).
    for (int s : {0, 10, 20, 30}) smash_symbol(pkt.quadrature, s);
    for (int s : {43, 53, 63, 73}) smash_symbol(pkt.quadrature, s);
    FrameDecodeResult r = decode_frame(pkt.in_phase, pkt.quadrature);
    REQUIRE(r.ok());
    CHECK(r.corrected_symbols == 8);
    CHECK(std::get<FrameB2>(*r.frame) == b2);

    FrameC c{0x00a1b2, patterned_pub(), patterned_sig()};
    pkt = encode_frame(Frame{c});
    for (int s : {1, 11, 21, 31, 41}) smash_symbol(pkt.quadrature, s);
    for (int s : {49, 59, 69, 79, 89}) smash_symbol(pkt.quadrature, s);
    r = decode_frame(pkt.in_phase, pkt.quadrature);
    REQUIRE(r.ok());
    CHECK(r.corrected_symbols == 10);
    CHECK(std::get<FrameC>(*r.frame) == c);
}

TEST_CASE("one overloaded block fails the whole packet") {
    FrameB2 b2{0x123456, 100, patterned_key(), patterned_sig()};
    FramePackets pkt = encode_frame(Frame{b2});
    for (int s : {0, 8, 16, 24, 32}) smash_symbol(pkt.quadrature, s);  // 5 > 4
    FrameDecodeResult r = decode_frame(pkt.in_phase, pkt.quadrature);
    CHECK(r.status == DecodeStatus::rs_uncorrectable);
}

TEST_CASE("mismatched packet sizes are unknown") {
    FramePackets pkt = encode_frame(Frame{sample_a()});
    BitVec short_q = pkt.quadrature.slice(0, 300);
    CHECK(decode_frame(pkt.in_phase, short_q).status == DecodeStatus::unknown_frame_type);
}

TEST_CASE("layout violations throw on encode") {
    FrameB1 big_icao{0x1000000, 0, patterned_key()};
    CHECK_THROWS_AS(encode_frame(Frame{big_icao}), LayoutViolation);
    FrameB1 big_interval{1, 0x10000, patterned_key()};
    CHECK_THROWS_AS(encode_frame(Frame{big_interval}), LayoutViolation);

    FrameA short_mac = sample_a(100);  // disagrees with config's 196
    CHECK_THROWS_AS(encode_frame(Frame{short_mac}), LayoutViolation);

    FrameA bad_carrier = sample_a();
    bad_carrier.adsb[13] ^= 1;  // break the legacy CRC
    CHECK_THROWS_AS(encode_frame(Frame{bad_carrier}), LayoutViolation);
}

TEST_CASE("mac length is a codec parameter") {
    CodecConfig cfg;
    cfg.mac_len_bits = 64;
    FrameA a = sample_a(64);
    FramePackets pkt = encode_frame(Frame{a}, cfg);
    FrameDecodeResult r = decode_frame(pkt.in_phase, pkt.quadrature, cfg);
    REQUIRE(r.ok());
    CHECK(std::get<FrameA>(*r.frame) == a);
    CodecConfig bad;
    bad.mac_len_bits = 197;
    CHECK_THROWS_AS(decode_frame(pkt.in_phase, pkt.quadrature, bad), InvalidConfig);
}

}
