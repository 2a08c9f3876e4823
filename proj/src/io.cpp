#include "cabba/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cabba/errors.hpp"

namespace cabba {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string frame_line(FrameType type, const FramePackets& pkt) {
    std::string out = frame_type_name(type);
    out += " I:" + pkt.in_phase.to_hex() + " Q:" + pkt.quadrature.to_hex();
    return out;
}

ParsedFrameLine parse_frame_line(const std::string& line) {
    ParsedFrameLine r;
    std::istringstream ss(line);
    std::string type_tok, i_tok, q_tok;
    if (!(ss >> type_tok)) return r;  // empty
    std::optional<FrameType> type = frame_type_from_name(type_tok);
    if (!type) {
        r.status = LineParse::bad_type;
        return r;
    }
    r.type = *type;
    if (!(ss >> i_tok) || !(ss >> q_tok) || i_tok.rfind("I:", 0) != 0 ||
        q_tok.rfind("Q:", 0) != 0) {
        r.status = LineParse::truncated;
        return r;
    }
    const std::string i_hex = i_tok.substr(2);
    const std::string q_hex = q_tok.substr(2);
    const int ib = in_phase_bits(*type);
    const int qb = ib * kQuadFactor;
    if (i_hex.size() != static_cast<std::size_t>((ib + 7) / 8) * 2 ||
        q_hex.size() != static_cast<std::size_t>((qb + 7) / 8) * 2) {
        r.status = LineParse::truncated;
        return r;
    }
    try {
        r.pkt.in_phase = BitVec::from_hex(i_hex, ib);
        r.pkt.quadrature = BitVec::from_hex(q_hex, qb);
    } catch (const AlignmentError&) {
        r.status = LineParse::bad_hex;
        return r;
    }
    r.status = LineParse::ok;
    return r;
}

bool write_iq(const std::string& path, const BasebandSignal& sig) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    for (const cplx& s : sig.samples) {
        const float re = static_cast<float>(s.real());
        const float im = static_cast<float>(s.imag());
        f.write(reinterpret_cast<const char*>(&re), sizeof(float));
        f.write(reinterpret_cast<const char*>(&im), sizeof(float));
    }
    std::ofstream meta(path + ".meta");
    if (!meta) return false;
    meta << "#sr=" << static_cast<long long>(sig.sample_rate_hz) << "\n";
    return static_cast<bool>(f) && static_cast<bool>(meta);
}

std::optional<BasebandSignal> read_iq(const std::string& path) {
    std::ifstream meta(path + ".meta");
    if (!meta) return std::nullopt;
    std::string line;
    std::getline(meta, line);
    if (line.rfind("#sr=", 0) != 0) return std::nullopt;
    BasebandSignal sig;
    try {
        sig.sample_rate_hz = std::stod(line.substr(4));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    float buf[2];
    while (f.read(reinterpret_cast<char*>(buf), sizeof(buf)))
        sig.samples.emplace_back(buf[0], buf[1]);
    if (f.gcount() != 0) return std::nullopt;  // odd float count
    return sig;
}

bool write_keychain(const std::string& path, const KeyChain& chain) {
    std::ofstream f(path);
    if (!f) return false;
    for (std::size_t i = chain.length() + 1; i-- > 0;)
        f << key_to_hex(chain.key(static_cast<std::uint32_t>(i))) << "\n";
    return static_cast<bool>(f);
}

std::optional<std::vector<Key128>> read_keychain(const std::string& path) {
    std::ifstream f(path);
    if (!f) return std::nullopt;
    std::vector<Key128> keys;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        try {
            keys.push_back(key_from_hex(line));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (keys.empty()) return std::nullopt;
    return keys;
}

std::optional<std::vector<EcdfPoint>> read_ecdf_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) return std::nullopt;
    std::vector<EcdfPoint> ecdf;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) return std::nullopt;
        try {
            EcdfPoint p;
            p.distance_km = std::stod(line.substr(0, comma));
            p.p = std::stod(line.substr(comma + 1));
            ecdf.push_back(p);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return ecdf;
}

}  // namespace cabba
