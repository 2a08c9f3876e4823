#pragma once

#include <cstdint>
#include <vector>

#include "cabba/modem.hpp"
#include "cabba/rng.hpp"

namespace cabba {

// Complex AWGN at a target Eb/N0. Symbol energy for the unit-amplitude
// half-symbol pulse is sps/2; noise is split evenly across I and Q.
struct AwgnChannel {
    double ebno_db = 10.0;
    std::uint64_t seed = 0;
};

BasebandSignal apply_awgn(const BasebandSignal& signal, const AwgnChannel& ch,
                          const ModemConfig& cfg);

// Coherent Gray-labeled M-PSK oracle: (2/k) Q(sqrt(2 k Eb/N0) sin(pi/M)).
double theoretical_psk_ber(int order, double ebno_db);

struct BerPoint {
    double ebno_db = 0.0;
    int psk_order = 8;
    std::uint64_t bits = 0;
    std::uint64_t errors = 0;
    std::uint64_t ppm_bits = 0;
    std::uint64_t ppm_errors = 0;
    std::uint64_t frames_lost = 0;
    double ber = 0.0;
    double ppm_ber = 0.0;
    double theory_ber = 0.0;
};

struct BerSweepConfig {
    std::vector<double> ebno_db;
    ModemConfig modem;
    std::uint64_t min_errors = 400;
    std::uint64_t max_bits = 2'000'000;
    std::uint64_t master_seed = 42;
    int frame_bits = 112;        // random in-phase payload length per frame
    int frames_per_batch = 25;
    int threads = 1;
};

// Monte-Carlo overlay BER. Work is split into batches seeded from
// (master_seed, point index, batch index), and the final tally is the
// ordered prefix of batches up to the stop condition, so the result is
// identical however batches were scheduled.
std::vector<BerPoint> ber_sweep(const BerSweepConfig& cfg);

}  // namespace cabba
