#include "cabba/channel.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "cabba/errors.hpp"

namespace cabba {
namespace {

double q_func(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

struct BatchTally {
    std::uint64_t bits = 0;
    std::uint64_t errors = 0;
    std::uint64_t ppm_bits = 0;
    std::uint64_t ppm_errors = 0;
    std::uint64_t frames_lost = 0;
};

BitVec random_bits(Rng& rng, int n) {
    BitVec v;
    for (int i = 0; i < n; ++i) v.push_back(rng.bit());
    return v;
}

void add_noise(BasebandSignal& sig, Rng& rng, double sd) {
    for (cplx& s : sig.samples) s += cplx(sd * rng.gauss(), sd * rng.gauss());
}

double noise_sd(const ModemConfig& modem, double ebno_db) {
    const double es = modem.samples_per_symbol / 2.0;
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    const double n0 = es / (modem.bits_per_symbol() * ebno);
    return std::sqrt(n0 / 2.0);
}

BatchTally run_batch(const BerSweepConfig& cfg, double ebno_db, std::uint64_t seed) {
    BatchTally t;
    Rng rng(seed);
    const int k = cfg.modem.bits_per_symbol();
    const double sd = noise_sd(cfg.modem, ebno_db);
    for (int f = 0; f < cfg.frames_per_batch; ++f) {
        FramePackets pkt;
        pkt.in_phase = random_bits(rng, cfg.frame_bits);
        pkt.quadrature = random_bits(rng, cfg.frame_bits * k);
        BasebandSignal sig = modulate_frame(pkt, cfg.modem);
        add_noise(sig, rng, sd);
        FrameDemodResult rx = demodulate_frame(sig, cfg.modem);
        if (!rx.preamble_found) {
            ++t.frames_lost;
            continue;
        }
        for (std::size_t i = 0; i < pkt.in_phase.size(); ++i) {
            ++t.ppm_bits;
            if (rx.in_phase[i] != pkt.in_phase[i]) ++t.ppm_errors;
        }
        for (std::size_t i = 0; i < pkt.quadrature.size(); ++i) {
            ++t.bits;
            if (rx.quadrature[i] != pkt.quadrature[i]) ++t.errors;
        }
    }
    return t;
}

}  // namespace

BasebandSignal apply_awgn(const BasebandSignal& signal, const AwgnChannel& ch,
                          const ModemConfig& cfg) {
    cfg.validate();
    BasebandSignal out = signal;
    if (std::isinf(ch.ebno_db)) return out;
    Rng rng(ch.seed);
    add_noise(out, rng, noise_sd(cfg, ch.ebno_db));
    return out;
}

double theoretical_psk_ber(int order, double ebno_db) {
    int k;
    switch (order) {
        case 8: k = 3; break;
        case 16: k = 4; break;
        case 32: k = 5; break;
        default: throw InvalidConfig("psk order must be 8, 16, or 32");
    }
    const double ebno = std::pow(10.0, ebno_db / 10.0);
    const double arg = std::sqrt(2.0 * k * ebno) * std::sin(std::numbers::pi / order);
    return (2.0 / k) * q_func(arg);
}

std::vector<BerPoint> ber_sweep(const BerSweepConfig& cfg) {
    cfg.modem.validate();
    if (cfg.min_errors == 0 || cfg.max_bits == 0)
        throw InvalidConfig("min_errors and max_bits must be positive");
    if (cfg.frame_bits <= 0 || cfg.frames_per_batch <= 0)
        throw InvalidConfig("frame_bits and frames_per_batch must be positive");
    const int threads = cfg.threads > 0 ? cfg.threads : 1;

    std::vector<BerPoint> points;
    points.reserve(cfg.ebno_db.size());
    for (std::size_t pi = 0; pi < cfg.ebno_db.size(); ++pi) {
        const double db = cfg.ebno_db[pi];
        BerPoint pt;
        pt.ebno_db = db;
        pt.psk_order = cfg.modem.psk_order;
        pt.theory_ber = theoretical_psk_ber(cfg.modem.psk_order, db) *
                        (cfg.modem.encoding == PhaseEncoding::differential ? 2.0 : 1.0);

        // Batches are accumulated strictly in index order; a wave of
        // batches may run on worker threads, but the tally a wave feeds
        // is the same whatever order the workers finish in.
        std::uint64_t next_batch = 0;
        bool stopped = false;
        while (!stopped) {
            std::vector<BatchTally> wave(static_cast<std::size_t>(threads));
            if (threads == 1) {
                wave[0] = run_batch(cfg, db, derive_seed(cfg.master_seed, pi, next_batch));
            } else {
                std::vector<std::thread> pool;
                pool.reserve(wave.size());
                for (std::size_t w = 0; w < wave.size(); ++w)
                    pool.emplace_back([&, w] {
                        wave[w] = run_batch(cfg, db, derive_seed(cfg.master_seed, pi, next_batch + w));
                    });
                for (std::thread& th : pool) th.join();
            }
            for (const BatchTally& t : wave) {
                pt.bits += t.bits;
                pt.errors += t.errors;
                pt.ppm_bits += t.ppm_bits;
                pt.ppm_errors += t.ppm_errors;
                pt.frames_lost += t.frames_lost;
                if (pt.errors >= cfg.min_errors || pt.bits >= cfg.max_bits) {
                    stopped = true;
                    break;
                }
            }
            next_batch += wave.size();
        }
        pt.ber = pt.bits ? static_cast<double>(pt.errors) / static_cast<double>(pt.bits) : 0.0;
        pt.ppm_ber =
            pt.ppm_bits ? static_cast<double>(pt.ppm_errors) / static_cast<double>(pt.ppm_bits) : 0.0;
        points.push_back(pt);
    }
    return points;
}

}  // namespace cabba
