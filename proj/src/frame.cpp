#include "cabba/frame.hpp"

#include <array>
#include <string>

#include "cabba/errors.hpp"
#include "cabba/rs.hpp"

namespace cabba {
namespace {

// Quadrature packet: [12-bit zero reference field][RS data region]
// [RS parity blocks][zero pad]. The data region is split into one or two
// RS blocks over GF(64); parity budgets differ per type because the
// quadrature bit budget differs per type.
struct QBlock {
    int data_syms;
    int parity_syms;
};

struct QSpec {
    int total_bits;
    int data_bits;
    std::array<QBlock, 2> blocks;
    int nblocks;
};

constexpr QSpec kSpecA{336, 204, {{{34, 20}, {0, 0}}}, 1};
constexpr QSpec kSpecB1{336, 96, {{{16, 20}, {0, 0}}}, 1};
constexpr QSpec kSpecB2{630, 516, {{{43, 9}, {43, 8}}}, 2};
constexpr QSpec kSpecC{726, 588, {{{49, 11}, {49, 10}}}, 2};

const QSpec& quad_spec(FrameType type) {
    switch (type) {
        case FrameType::A: return kSpecA;
        case FrameType::B1: return kSpecB1;
        case FrameType::B2: return kSpecB2;
        case FrameType::C: return kSpecC;
    }
    throw InvalidConfig("bad frame type");
}

std::vector<std::uint8_t> bits_to_syms(const BitVec& bits) {
    if (bits.size() % rs::kSymbolBits != 0)
        throw LayoutViolation("RS region not a whole number of symbols");
    std::vector<std::uint8_t> syms(bits.size() / rs::kSymbolBits);
    for (std::size_t i = 0; i < syms.size(); ++i)
        syms[i] = static_cast<std::uint8_t>(bits.read_uint(i * rs::kSymbolBits, rs::kSymbolBits));
    return syms;
}

BitVec syms_to_bits(const std::vector<std::uint8_t>& syms) {
    BitVec bits;
    for (std::uint8_t s : syms) bits.append_uint(s, rs::kSymbolBits);
    return bits;
}

BitVec encode_quadrature(const BitVec& content, const QSpec& spec) {
    if (static_cast<int>(content.size()) > spec.data_bits)
        throw LayoutViolation("quadrature content exceeds data region");
    BitVec data = content;
    data.append_zeros(spec.data_bits - content.size());
    std::vector<std::uint8_t> syms = bits_to_syms(data);

    BitVec out;
    out.append_zeros(kRefFieldBits);
    out.append(data);
    std::size_t off = 0;
    for (int b = 0; b < spec.nblocks; ++b) {
        std::vector<std::uint8_t> block(syms.begin() + off, syms.begin() + off + spec.blocks[b].data_syms);
        out.append(syms_to_bits(rs::encode(block, spec.blocks[b].parity_syms)));
        off += spec.blocks[b].data_syms;
    }
    if (static_cast<int>(out.size()) > spec.total_bits)
        throw LayoutViolation("quadrature packet overflows bit budget");
    out.append_zeros(spec.total_bits - out.size());
    return out;
}

struct QDecode {
    bool ok = false;
    BitVec data;
    int corrected = 0;
};

QDecode decode_quadrature(const BitVec& packet, const QSpec& spec) {
    QDecode r;
    if (static_cast<int>(packet.size()) != spec.total_bits) return r;
    std::vector<std::uint8_t> data_syms =
        bits_to_syms(packet.slice(kRefFieldBits, spec.data_bits));
    std::size_t parity_off = kRefFieldBits + spec.data_bits;
    std::size_t data_off = 0;
    std::vector<std::uint8_t> fixed;
    for (int b = 0; b < spec.nblocks; ++b) {
        int nd = spec.blocks[b].data_syms;
        int np = spec.blocks[b].parity_syms;
        std::vector<std::uint8_t> cw(data_syms.begin() + data_off, data_syms.begin() + data_off + nd);
        std::vector<std::uint8_t> par =
            bits_to_syms(packet.slice(parity_off, np * rs::kSymbolBits));
        cw.insert(cw.end(), par.begin(), par.end());
        rs::DecodeResult dr = rs::decode(cw, np);
        if (!dr.ok) return r;
        r.corrected += dr.corrected;
        fixed.insert(fixed.end(), cw.begin(), cw.begin() + nd);
        data_off += nd;
        parity_off += np * rs::kSymbolBits;
    }
    r.data = syms_to_bits(fixed);
    r.ok = true;
    return r;
}

BitVec key_bits(const Key128& key) {
    return BitVec::from_bytes(key.data(), 128);
}

void check_icao(std::uint32_t icao) {
    if (icao > 0xFFFFFF) throw LayoutViolation("icao exceeds 24 bits");
}

void check_interval(std::uint32_t interval) {
    if (interval > 0xFFFF) throw LayoutViolation("interval exceeds 16-bit field");
}

BitVec header_bits(int type_code, std::uint32_t icao) {
    BitVec v;
    v.append_uint(static_cast<std::uint64_t>(type_code), 5);
    v.append_uint(0, 3);  // subtype, reserved
    v.append_uint(icao, 24);
    return v;
}

void finish_in_phase(BitVec& v, int total_bits) {
    v.append_zeros(total_bits - 24 - v.size());
    v.append_uint(crc24(v), 24);
}

template <std::size_t N>
std::array<std::uint8_t, N> bits_to_array(const BitVec& bits) {
    if (bits.size() != N * 8) throw LayoutViolation("field width mismatch");
    std::array<std::uint8_t, N> out{};
    std::vector<std::uint8_t> bytes = bits.to_bytes();
    std::copy(bytes.begin(), bytes.end(), out.begin());
    return out;
}

}  // namespace

int in_phase_bits(FrameType type) {
    switch (type) {
        case FrameType::A: return kInPhaseBitsA;
        case FrameType::B1: return kInPhaseBitsB1;
        case FrameType::B2: return kInPhaseBitsB2;
        case FrameType::C: return kInPhaseBitsC;
    }
    throw InvalidConfig("bad frame type");
}

double frame_airtime_us(FrameType type) {
    return 8.0 + in_phase_bits(type);  // 8 us preamble, 1 Mbps PPM
}

FrameType frame_type(const Frame& frame) {
    return std::visit(
        [](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FrameA>) return FrameType::A;
            else if constexpr (std::is_same_v<T, FrameB1>) return FrameType::B1;
            else if constexpr (std::is_same_v<T, FrameB2>) return FrameType::B2;
            else return FrameType::C;
        },
        frame);
}

const char* frame_type_name(FrameType type) {
    switch (type) {
        case FrameType::A: return "A";
        case FrameType::B1: return "B1";
        case FrameType::B2: return "B2";
        case FrameType::C: return "C";
    }
    return "?";
}

std::optional<FrameType> frame_type_from_name(const std::string& name) {
    if (name == "A") return FrameType::A;
    if (name == "B1") return FrameType::B1;
    if (name == "B2") return FrameType::B2;
    if (name == "C") return FrameType::C;
    return std::nullopt;
}

std::uint32_t frame_icao(const Frame& frame) {
    return std::visit(
        [](const auto& f) -> std::uint32_t {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FrameA>) return adsb_icao(f.adsb);
            else return f.icao;
        },
        frame);
}

std::optional<FrameType> classify_frame(const BitVec& in_phase) {
    if (in_phase.size() < 5) return std::nullopt;
    int code = static_cast<int>(in_phase.read_uint(0, 5));
    switch (in_phase.size()) {
        case kInPhaseBitsA:
            if (code == kDf17) return FrameType::A;
            if (code == kTypeCodeB1) return FrameType::B1;
            return std::nullopt;
        case kInPhaseBitsB2:
            return code == kTypeCodeB2 ? std::optional<FrameType>(FrameType::B2) : std::nullopt;
        case kInPhaseBitsC:
            return code == kTypeCodeC ? std::optional<FrameType>(FrameType::C) : std::nullopt;
        default:
            return std::nullopt;
    }
}

FramePackets encode_frame(const Frame& frame, const CodecConfig& cfg) {
    if (cfg.mac_len_bits < TeslaConfig::kMacMinBits || cfg.mac_len_bits > TeslaConfig::kMacMaxBits)
        throw InvalidConfig("mac_len_bits out of range");
    FramePackets pkt;

    if (const auto* a = std::get_if<FrameA>(&frame)) {
        if (adsb_df(a->adsb) != kDf17)
            throw LayoutViolation("type A carrier must be DF17");
        if (!adsb_crc_ok(a->adsb))
            throw LayoutViolation("type A carrier fails CRC");
        if (static_cast<int>(a->mac_bits.size()) != cfg.mac_len_bits)
            throw LayoutViolation("MAC length does not match codec config");
        pkt.in_phase = BitVec::from_bytes(a->adsb.data(), kAdsbFrameBits);
        BitVec content = a->mac_bits;
        content.append_uint(a->seq, 8);
        pkt.quadrature = encode_quadrature(content, kSpecA);
        return pkt;
    }

    if (const auto* b1 = std::get_if<FrameB1>(&frame)) {
        check_icao(b1->icao);
        check_interval(b1->interval);
        BitVec kb = key_bits(b1->key);
        pkt.in_phase = header_bits(kTypeCodeB1, b1->icao);
        pkt.in_phase.append(kb.slice(0, 50));
        finish_in_phase(pkt.in_phase, kInPhaseBitsB1);
        BitVec content;
        content.append_uint(b1->interval, 16);
        content.append(kb.slice(50, 78));
        pkt.quadrature = encode_quadrature(content, kSpecB1);
        return pkt;
    }

    if (const auto* b2 = std::get_if<FrameB2>(&frame)) {
        check_icao(b2->icao);
        check_interval(b2->interval);
        BitVec sb = BitVec::from_bytes(b2->sig.data(), 512);
        pkt.in_phase = header_bits(kTypeCodeB2, b2->icao);
        pkt.in_phase.append(key_bits(b2->key));
        pkt.in_phase.append(sb.slice(0, 14));
        finish_in_phase(pkt.in_phase, kInPhaseBitsB2);
        BitVec content;
        content.append_uint(b2->interval, 16);
        content.append(sb.slice(14, 498));
        pkt.quadrature = encode_quadrature(content, kSpecB2);
        return pkt;
    }

    const auto& c = std::get<FrameC>(frame);
    check_icao(c.icao);
    BitVec pb = BitVec::from_bytes(c.pubkey.data(), 256);
    pkt.in_phase = header_bits(kTypeCodeC, c.icao);
    pkt.in_phase.append(pb.slice(0, 181));
    finish_in_phase(pkt.in_phase, kInPhaseBitsC);
    BitVec content = pb.slice(181, 75);
    content.append(BitVec::from_bytes(c.sig.data(), 512));
    pkt.quadrature = encode_quadrature(content, kSpecC);
    return pkt;
}

FrameDecodeResult decode_frame(const BitVec& in_phase, const BitVec& quadrature,
                               const CodecConfig& cfg) {
    if (cfg.mac_len_bits < TeslaConfig::kMacMinBits || cfg.mac_len_bits > TeslaConfig::kMacMaxBits)
        throw InvalidConfig("mac_len_bits out of range");
    FrameDecodeResult r;
    std::optional<FrameType> type = classify_frame(in_phase);
    if (!type || quadrature.size() != in_phase.size() * kQuadFactor) {
        r.status = DecodeStatus::unknown_frame_type;
        return r;
    }
    if (crc24(in_phase) != 0) {
        r.status = DecodeStatus::crc_mismatch;
        return r;
    }
    QDecode q = decode_quadrature(quadrature, quad_spec(*type));
    if (!q.ok) {
        r.status = DecodeStatus::rs_uncorrectable;
        return r;
    }
    r.corrected_symbols = q.corrected;

    switch (*type) {
        case FrameType::A: {
            FrameA a;
            std::vector<std::uint8_t> bytes = in_phase.to_bytes();
            std::copy(bytes.begin(), bytes.end(), a.adsb.begin());
            a.mac_bits = q.data.slice(0, cfg.mac_len_bits);
            a.seq = static_cast<std::uint8_t>(q.data.read_uint(cfg.mac_len_bits, 8));
            r.frame = a;
            break;
        }
        case FrameType::B1: {
            FrameB1 b1;
            b1.icao = static_cast<std::uint32_t>(in_phase.read_uint(8, 24));
            b1.interval = static_cast<std::uint32_t>(q.data.read_uint(0, 16));
            BitVec kb = in_phase.slice(32, 50);
            kb.append(q.data.slice(16, 78));
            b1.key = bits_to_array<16>(kb);
            r.frame = b1;
            break;
        }
        case FrameType::B2: {
            FrameB2 b2;
            b2.icao = static_cast<std::uint32_t>(in_phase.read_uint(8, 24));
            b2.interval = static_cast<std::uint32_t>(q.data.read_uint(0, 16));
            b2.key = bits_to_array<16>(in_phase.slice(32, 128));
            BitVec sb = in_phase.slice(160, 14);
            sb.append(q.data.slice(16, 498));
            b2.sig = bits_to_array<64>(sb);
            r.frame = b2;
            break;
        }
        case FrameType::C: {
            FrameC c;
            c.icao = static_cast<std::uint32_t>(in_phase.read_uint(8, 24));
            BitVec pb = in_phase.slice(32, 181);
            pb.append(q.data.slice(0, 75));
            c.pubkey = bits_to_array<32>(pb);
            c.sig = bits_to_array<64>(q.data.slice(75, 512));
            r.frame = c;
            break;
        }
    }
    r.status = DecodeStatus::ok;
    return r;
}

}  // namespace cabba
