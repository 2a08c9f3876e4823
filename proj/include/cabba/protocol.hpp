#pragma once

#include <cstdint>

#include "cabba/frame.hpp"
#include "cabba/pki.hpp"
#include "cabba/tesla.hpp"

namespace cabba {

// Transmit-side driver: owns the identity, the key chain, and the
// per-interval MAC sequence counter. Key disclosure lags by one
// interval, so B1/B2 sent during interval i carry the key of i-1.
class Transmitter {
  public:
    Transmitter(AircraftIdentity identity, KeyChain chain, TeslaConfig tesla = {},
                CodecConfig codec = {});

    FrameA make_a(const AdsbFrame& adsb, std::uint32_t interval);
    FrameB1 make_b1(std::uint32_t interval);
    FrameB2 make_b2(std::uint32_t interval);
    FrameC make_c() const;

    const AircraftIdentity& identity() const { return identity_; }
    const KeyChain& chain() const { return chain_; }
    const TeslaConfig& tesla() const { return tesla_; }
    const CodecConfig& codec() const { return codec_; }

  private:
    AircraftIdentity identity_;
    KeyChain chain_;
    TeslaConfig tesla_;
    CodecConfig codec_;
    std::uint32_t seq_interval_ = 0;
    std::uint8_t next_seq_ = 0;
};

}  // namespace cabba
