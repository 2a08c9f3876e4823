#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cabba/bits.hpp"
#include "cabba/frame.hpp"

namespace cabba {

using cplx = std::complex<double>;

enum class PhaseEncoding { absolute, differential };

// Symbol labeling for the PSK overlay. natural maps the bit-group value
// straight to the constellation index (bits 111 -> phase 7*2pi/8); gray
// relabels so adjacent constellation points differ in one bit.
enum class BitMapping { natural, gray };

struct ModemConfig {
    int samples_per_symbol = 10;  // even; 1 us PPM symbol
    int psk_order = 8;            // 8 | 16 | 32
    PhaseEncoding encoding = PhaseEncoding::differential;
    BitMapping bit_mapping = BitMapping::natural;
    double preamble_threshold = 0.25;  // active-vs-quiet mean power gap

    int bits_per_symbol() const;
    void validate() const;
};

struct BasebandSignal {
    std::vector<cplx> samples;
    double sample_rate_hz = 0.0;
};

constexpr int kPreambleUs = 8;

// PPM pulse windows of the 8 us preamble, in half-microsecond units:
// pulses occupy [0,0.5), [1,1.5), [3.5,4), [4.5,5) us.
bool preamble_active(int sample, int sps);

// Real-envelope PPM: preamble followed by one 1 us symbol per bit, bit 1
// pulsing the first half-symbol and bit 0 the second.
std::vector<double> ppm_modulate(const BitVec& bits, const ModemConfig& cfg);

// Per-symbol unit phasors for the PSK overlay. nbits must divide evenly
// into symbols. Differential chains phases with reference phase 0.
std::vector<cplx> psk_modulate(const BitVec& bits, const ModemConfig& cfg);

// Complex baseband: sample_n = ppm_n * phasor of the covering symbol.
// Preamble pulses carry phase 0. Envelope length must equal
// (8 + nsymbols) * sps.
BasebandSignal iq_compose(const std::vector<double>& envelope,
                          const std::vector<cplx>& phasors, const ModemConfig& cfg);

struct PpmDemodResult {
    bool preamble_found = false;
    BitVec bits;
};

struct PskDemodResult {
    bool preamble_found = false;
    BitVec bits;
};

struct FrameDemodResult {
    bool preamble_found = false;
    BitVec in_phase;
    BitVec quadrature;
};

// Envelope half-symbol energy comparison; ignores phase entirely.
PpmDemodResult ppm_demodulate(const BasebandSignal& signal, const ModemConfig& cfg);

// Phase recovery on pulse-active windows: average the window samples,
// take the argument, slice against the constellation.
PskDemodResult psk_demodulate(const BasebandSignal& signal, const ModemConfig& cfg);

BasebandSignal modulate_frame(const FramePackets& pkt, const ModemConfig& cfg);
FrameDemodResult demodulate_frame(const BasebandSignal& signal, const ModemConfig& cfg);

// Mean |sample|^2 over pulse-active samples (for the unit-energy check).
double mean_active_power(const BasebandSignal& signal, const ModemConfig& cfg);

}  // namespace cabba
