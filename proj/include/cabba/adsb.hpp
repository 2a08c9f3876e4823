#pragma once

#include <array>
#include <cstdint>

#include "cabba/bits.hpp"

namespace cabba {

// Mode S extended squitter helpers for the legacy 1090ES in-phase layer.
//
//   DF17 frame, 112 bits:
//     DF    5 bits   downlink format, 17
//     CA    3 bits   capability
//     AA   24 bits   ICAO address
//     ME   56 bits   extended squitter message
//     PI   24 bits   CRC-24 parity
constexpr int kAdsbFrameBits = 112;
constexpr int kAdsbFrameBytes = 14;
constexpr std::uint32_t kCrc24Poly = 0xFFF409;
constexpr int kDf17 = 17;

using AdsbFrame = std::array<std::uint8_t, kAdsbFrameBytes>;

// CRC-24 over a bit string, MSB first, zero initial remainder.
std::uint32_t crc24(const BitVec& bits);
std::uint32_t crc24_bytes(const std::uint8_t* data, std::size_t len);

// Builds a DF17 frame: CA=5, given ICAO and 56-bit ME field, PI = CRC.
AdsbFrame make_df17(std::uint32_t icao, std::uint64_t me56);

bool adsb_crc_ok(const AdsbFrame& frame);
int adsb_df(const AdsbFrame& frame);
std::uint32_t adsb_icao(const AdsbFrame& frame);

}  // namespace cabba
