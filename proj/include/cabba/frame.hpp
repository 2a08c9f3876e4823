#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cabba/adsb.hpp"
#include "cabba/bits.hpp"
#include "cabba/pki.hpp"
#include "cabba/tesla.hpp"

namespace cabba {

// Four over-the-air packet types. The in-phase packet rides the legacy
// PPM layer; the quadrature packet rides the D8PSK overlay and is always
// 3x the in-phase bit count (one 3-bit PSK symbol per 1 us PPM symbol).
//
//   type  in-phase bits  quadrature bits  airtime (8 us preamble + 1 us/bit)
//   A          112             336           120 us
//   B1         112             336           120 us
//   B2         210             630           218 us
//   C          242             726           250 us
enum class FrameType { A, B1, B2, C };

// Type A: standard DF17 squitter in-phase; sigma = MAC || seq quadrature.
struct FrameA {
    AdsbFrame adsb{};    // verbatim 112-bit DF17 frame, CRC included
    BitVec mac_bits;     // lambda leftmost HMAC bits
    std::uint8_t seq = 0;
    bool operator==(const FrameA&) const = default;
};

// Type B1: interval key disclosure. 50 key bits in-phase, 78 quadrature.
struct FrameB1 {
    std::uint32_t icao = 0;
    std::uint32_t interval = 0;  // interval of the disclosed key, 16-bit field
    Key128 key{};
    bool operator==(const FrameB1&) const = default;
};

// Type B2: signed interval key. Key and the 14 leftmost signature bits
// in-phase; remaining 498 signature bits quadrature.
struct FrameB2 {
    std::uint32_t icao = 0;
    std::uint32_t interval = 0;
    Key128 key{};
    Signature512 sig{};
    bool operator==(const FrameB2&) const = default;
};

// Type C: certificate. First 181 public-key bits in-phase; remaining 75
// plus the full 512-bit CA signature quadrature.
struct FrameC {
    std::uint32_t icao = 0;
    PublicKey256 pubkey{};
    Signature512 sig{};
    bool operator==(const FrameC&) const = default;
};

using Frame = std::variant<FrameA, FrameB1, FrameB2, FrameC>;

struct FramePackets {
    BitVec in_phase;
    BitVec quadrature;
};

struct CodecConfig {
    int mac_len_bits = 196;  // lambda; decode needs it to split sigma
};

constexpr int kInPhaseBitsA = 112;
constexpr int kInPhaseBitsB1 = 112;
constexpr int kInPhaseBitsB2 = 210;
constexpr int kInPhaseBitsC = 242;
constexpr int kQuadFactor = 3;  // D8PSK bits per PPM bit
constexpr int kRefFieldBits = 12;

// In-phase 5-bit type codes for the non-legacy frames (DF space values
// unused by Mode S transponders).
constexpr int kTypeCodeB1 = 25;
constexpr int kTypeCodeB2 = 26;
constexpr int kTypeCodeC = 27;

enum class DecodeStatus { ok, unknown_frame_type, crc_mismatch, rs_uncorrectable };

struct FrameDecodeResult {
    DecodeStatus status = DecodeStatus::unknown_frame_type;
    std::optional<Frame> frame;
    int corrected_symbols = 0;
    bool ok() const { return status == DecodeStatus::ok; }
};

FramePackets encode_frame(const Frame& frame, const CodecConfig& cfg = {});
FrameDecodeResult decode_frame(const BitVec& in_phase, const BitVec& quadrature,
                               const CodecConfig& cfg = {});

std::optional<FrameType> classify_frame(const BitVec& in_phase);
double frame_airtime_us(FrameType type);
std::uint32_t frame_icao(const Frame& frame);
FrameType frame_type(const Frame& frame);
const char* frame_type_name(FrameType type);
std::optional<FrameType> frame_type_from_name(const std::string& name);

// Expected in-phase bit count per type (quadrature = 3x).
int in_phase_bits(FrameType type);

}  // namespace cabba
