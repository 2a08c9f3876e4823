#include "cabba/protocol.hpp"

#include "cabba/errors.hpp"

namespace cabba {

Transmitter::Transmitter(AircraftIdentity identity, KeyChain chain, TeslaConfig tesla,
                         CodecConfig codec)
    : identity_(std::move(identity)),
      chain_(std::move(chain)),
      tesla_(tesla),
      codec_(codec) {
    tesla_.validate();
    if (tesla_.mac_len_bits != codec_.mac_len_bits)
        throw InvalidConfig("tesla and codec MAC lengths disagree");
}

FrameA Transmitter::make_a(const AdsbFrame& adsb, std::uint32_t interval) {
    if (interval > chain_.length())
        throw IndexOutOfRange("interval beyond the key chain");
    if (interval != seq_interval_) {
        seq_interval_ = interval;
        next_seq_ = 0;
    }
    const AuthKey ak = derive_auth_key(chain_.key(interval), interval);
    const MacTag tag = compute_mac(BitVec::from_bytes(adsb.data(), kAdsbFrameBits), ak,
                                   next_seq_++, tesla_.mac_len_bits);
    FrameA a;
    a.adsb = adsb;
    a.mac_bits = tag.bits;
    a.seq = tag.seq;
    return a;
}

FrameB1 Transmitter::make_b1(std::uint32_t interval) {
    if (interval == 0) throw InvalidOrder("nothing to disclose before interval 1");
    if (interval > chain_.length())
        throw IndexOutOfRange("interval beyond the key chain");
    FrameB1 b;
    b.icao = identity_.icao;
    b.interval = interval - 1;
    b.key = chain_.key(interval - 1);
    return b;
}

FrameB2 Transmitter::make_b2(std::uint32_t interval) {
    const FrameB1 b1 = make_b1(interval);
    FrameB2 b;
    b.icao = b1.icao;
    b.interval = b1.interval;
    b.key = b1.key;
    b.sig = sign_interval_key(identity_.keys.sec, b1.key);
    return b;
}

FrameC Transmitter::make_c() const {
    FrameC c;
    c.icao = identity_.icao;
    c.pubkey = identity_.keys.pub;
    c.sig = identity_.certificate;
    return c;
}

}  // namespace cabba
