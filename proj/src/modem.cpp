#include "cabba/modem.hpp"

#include <cmath>
#include <numbers>

#include "cabba/errors.hpp"

namespace cabba {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int gray_label(int pos) { return pos ^ (pos >> 1); }

int gray_to_pos(int label) {
    int p = 0;
    for (int g = label; g != 0; g >>= 1) p ^= g;
    return p;
}

int wrap_mod(int v, int m) {
    int r = v % m;
    return r < 0 ? r + m : r;
}

struct PskCore {
    bool preamble_found = false;
    BitVec ppm_bits;
    BitVec psk_bits;
};

// Shared demod pass: PPM decisions locate the pulse-active half-symbol
// windows, which then carry the phase estimates.
PskCore demod_core(const BasebandSignal& signal, const ModemConfig& cfg, bool want_psk) {
    cfg.validate();
    const int sps = cfg.samples_per_symbol;
    if (signal.sample_rate_hz != static_cast<double>(sps) * 1e6)
        throw AlignmentError("sample rate does not match samples_per_symbol");
    const std::size_t n = signal.samples.size();
    if (n % static_cast<std::size_t>(sps) != 0)
        throw AlignmentError("signal length not a whole number of symbols");
    const std::size_t nsym_total = n / static_cast<std::size_t>(sps);
    if (nsym_total < kPreambleUs)
        throw AlignmentError("signal shorter than the preamble");
    const std::size_t nbits = nsym_total - kPreambleUs;

    PskCore out;
    double active = 0.0, quiet = 0.0;
    int n_active = 0, n_quiet = 0;
    for (int s = 0; s < kPreambleUs * sps; ++s) {
        double p = std::norm(signal.samples[static_cast<std::size_t>(s)]);
        if (preamble_active(s, sps)) {
            active += p;
            ++n_active;
        } else {
            quiet += p;
            ++n_quiet;
        }
    }
    if (active / n_active - quiet / n_quiet <= cfg.preamble_threshold) return out;
    out.preamble_found = true;

    const int half = sps / 2;
    const int bps = cfg.bits_per_symbol();
    const int order = cfg.psk_order;

    int prev_pos = 0;

    for (std::size_t k = 0; k < nbits; ++k) {
        const std::size_t base = (kPreambleUs + k) * static_cast<std::size_t>(sps);
        double e1 = 0.0, e2 = 0.0;
        for (int s = 0; s < half; ++s) {
            e1 += std::norm(signal.samples[base + static_cast<std::size_t>(s)]);
            e2 += std::norm(signal.samples[base + static_cast<std::size_t>(half + s)]);
        }
        const bool bit = e1 > e2;
        out.ppm_bits.push_back(bit);
        if (!want_psk) continue;

        cplx y = 0.0;
        const std::size_t woff = base + (bit ? 0 : static_cast<std::size_t>(half));
        for (int s = 0; s < half; ++s) y += signal.samples[woff + static_cast<std::size_t>(s)];
        const double phi = std::arg(y);
        int pos = wrap_mod(static_cast<int>(std::lround(phi * order / kTwoPi)), order);
        if (cfg.encoding == PhaseEncoding::differential) {
            // Nearest-point decision first, then decode the step between
            // decided points. A decision error corrupts exactly two steps,
            // the standard doubling.
            const int abs_pos = pos;
            pos = wrap_mod(abs_pos - prev_pos, order);
            prev_pos = abs_pos;
        }
        int label = cfg.bit_mapping == BitMapping::gray ? gray_label(pos) : pos;
        out.psk_bits.append_uint(static_cast<std::uint64_t>(label), bps);
    }
    return out;
}

}  // namespace

int ModemConfig::bits_per_symbol() const {
    switch (psk_order) {
        case 8: return 3;
        case 16: return 4;
        case 32: return 5;
        default: throw InvalidConfig("psk_order must be 8, 16, or 32");
    }
}

void ModemConfig::validate() const {
    if (samples_per_symbol < 4 || samples_per_symbol % 2 != 0)
        throw InvalidConfig("samples_per_symbol must be even and >= 4");
    (void)bits_per_symbol();
    if (preamble_threshold <= 0.0 || preamble_threshold >= 1.0)
        throw InvalidConfig("preamble_threshold must be in (0, 1)");
}

bool preamble_active(int sample, int sps) {
    const int half = sps / 2;
    const int idx = sample / half;
    return idx == 0 || idx == 2 || idx == 7 || idx == 9;
}

std::vector<double> ppm_modulate(const BitVec& bits, const ModemConfig& cfg) {
    cfg.validate();
    const int sps = cfg.samples_per_symbol;
    const int half = sps / 2;
    std::vector<double> out((kPreambleUs + bits.size()) * static_cast<std::size_t>(sps), 0.0);
    for (int s = 0; s < kPreambleUs * sps; ++s)
        if (preamble_active(s, sps)) out[static_cast<std::size_t>(s)] = 1.0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        const std::size_t base = (kPreambleUs + k) * static_cast<std::size_t>(sps);
        const std::size_t off = bits[k] ? 0 : static_cast<std::size_t>(half);
        for (int s = 0; s < half; ++s) out[base + off + static_cast<std::size_t>(s)] = 1.0;
    }
    return out;
}

std::vector<cplx> psk_modulate(const BitVec& bits, const ModemConfig& cfg) {
    cfg.validate();
    const int bps = cfg.bits_per_symbol();
    if (bits.size() % static_cast<std::size_t>(bps) != 0)
        throw SymbolAlignment("bit count not divisible by bits per symbol");
    const int order = cfg.psk_order;
    std::vector<cplx> phasors;
    phasors.reserve(bits.size() / static_cast<std::size_t>(bps));
    double phi = 0.0;
    for (std::size_t k = 0; k * bps < bits.size(); ++k) {
        int label = static_cast<int>(bits.read_uint(k * bps, bps));
        int pos = cfg.bit_mapping == BitMapping::gray ? gray_to_pos(label) : label;
        const double theta = kTwoPi * pos / order;
        phi = cfg.encoding == PhaseEncoding::differential ? phi + theta : theta;
        phasors.push_back(std::polar(1.0, phi));
    }
    return phasors;
}

BasebandSignal iq_compose(const std::vector<double>& envelope,
                          const std::vector<cplx>& phasors, const ModemConfig& cfg) {
    cfg.validate();
    const int sps = cfg.samples_per_symbol;
    const std::size_t expect = (kPreambleUs + phasors.size()) * static_cast<std::size_t>(sps);
    if (envelope.size() != expect)
        throw AlignmentError("envelope length does not cover preamble plus symbols");
    BasebandSignal sig;
    sig.sample_rate_hz = static_cast<double>(sps) * 1e6;
    sig.samples.resize(envelope.size());
    const std::size_t pre = static_cast<std::size_t>(kPreambleUs) * sps;
    for (std::size_t n = 0; n < envelope.size(); ++n) {
        const cplx ph = n < pre ? cplx(1.0, 0.0) : phasors[(n - pre) / sps];
        sig.samples[n] = envelope[n] * ph;
    }
    return sig;
}

PpmDemodResult ppm_demodulate(const BasebandSignal& signal, const ModemConfig& cfg) {
    PskCore core = demod_core(signal, cfg, false);
    if (!core.preamble_found) throw NoPreamble("preamble power gap below threshold");
    return {core.preamble_found, std::move(core.ppm_bits)};
}

PskDemodResult psk_demodulate(const BasebandSignal& signal, const ModemConfig& cfg) {
    PskCore core = demod_core(signal, cfg, true);
    if (!core.preamble_found) throw NoPreamble("preamble power gap below threshold");
    return {core.preamble_found, std::move(core.psk_bits)};
}

BasebandSignal modulate_frame(const FramePackets& pkt, const ModemConfig& cfg) {
    cfg.validate();
    if (pkt.quadrature.size() != pkt.in_phase.size() * static_cast<std::size_t>(cfg.bits_per_symbol()))
        throw AlignmentError("quadrature bits must be in-phase bits times bits per symbol");
    return iq_compose(ppm_modulate(pkt.in_phase, cfg), psk_modulate(pkt.quadrature, cfg), cfg);
}

FrameDemodResult demodulate_frame(const BasebandSignal& signal, const ModemConfig& cfg) {
    PskCore core = demod_core(signal, cfg, true);
    FrameDemodResult r;
    r.preamble_found = core.preamble_found;
    if (!core.preamble_found) return r;
    r.in_phase = std::move(core.ppm_bits);
    r.quadrature = std::move(core.psk_bits);
    return r;
}

double mean_active_power(const BasebandSignal& signal, const ModemConfig& cfg) {
    cfg.validate();
    double sum = 0.0;
    std::size_t n = 0;
    for (const cplx& s : signal.samples) {
        const double p = std::norm(s);
        if (p > 1e-9) {
            sum += p;
            ++n;
        }
    }
    if (n == 0) throw InvalidConfig("signal has no active samples");
    return sum / static_cast<double>(n);
}

}  // namespace cabba
