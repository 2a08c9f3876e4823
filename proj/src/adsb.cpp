#include "cabba/adsb.hpp"

#include "cabba/errors.hpp"

namespace cabba {

std::uint32_t crc24(const BitVec& bits) {
    std::uint32_t reg = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        reg ^= static_cast<std::uint32_t>(bits[i]) << 23;
        bool top = reg & 0x800000;
        reg = (reg << 1) & 0xFFFFFF;
        if (top) reg ^= kCrc24Poly & 0xFFFFFF;
    }
    return reg;
}

std::uint32_t crc24_bytes(const std::uint8_t* data, std::size_t len) {
    return crc24(BitVec::from_bytes(data, len * 8));
}

AdsbFrame make_df17(std::uint32_t icao, std::uint64_t me56) {
    if (icao > 0xFFFFFF)
        throw InvalidConfig("icao must fit 24 bits");
    BitVec b;
    b.append_uint(kDf17, 5);
    b.append_uint(5, 3);  // CA
    b.append_uint(icao, 24);
    b.append_uint(me56 & 0xFFFFFFFFFFFFFFull, 56);
    b.append_uint(crc24(b), 24);
    auto bytes = b.to_bytes();
    AdsbFrame f;
    std::copy(bytes.begin(), bytes.end(), f.begin());
    return f;
}

bool adsb_crc_ok(const AdsbFrame& frame) {
    return crc24_bytes(frame.data(), frame.size()) == 0;
}

int adsb_df(const AdsbFrame& frame) {
    return frame[0] >> 3;
}

std::uint32_t adsb_icao(const AdsbFrame& frame) {
    return static_cast<std::uint32_t>(frame[1]) << 16 |
           static_cast<std::uint32_t>(frame[2]) << 8 | frame[3];
}

}  // namespace cabba
