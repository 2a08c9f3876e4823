// cabba: one binary over the whole pipeline. Subcommands wrap the
// library modules; every run with identical flags and seed produces
// byte-identical output (floats go through fmt6, randomness through the
// global --seed).
//
// Exit codes: 0 ok, 1 domain failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cabba/adsb.hpp"
#include "cabba/airspace.hpp"
#include "cabba/channel.hpp"
#include "cabba/errors.hpp"
#include "cabba/frame.hpp"
#include "cabba/io.hpp"
#include "cabba/modem.hpp"
#include "cabba/pki.hpp"
#include "cabba/protocol.hpp"
#include "cabba/receiver.hpp"
#include "cabba/rng.hpp"
#include "cabba/tesla.hpp"

using json = nlohmann::json;
using namespace cabba;

namespace {

// Flag and input-format problems that CLI11 cannot catch itself.
struct UsageFailure : std::runtime_error {
    explicit UsageFailure(const std::string& what) : std::runtime_error(what) {}
};

struct GlobalOpts {
    std::uint64_t seed = 42;
    std::string format;  // "", "text", "csv", "json"
};

std::string pick_format(const GlobalOpts& g, const std::string& natural) {
    if (g.format.empty()) return natural;
    return g.format;
}

// Six-significant-digit double for json payloads, so json and text
// renderings agree.
double r6(double v) { return std::stod(fmt6(v)); }

std::ifstream open_or_usage(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageFailure("cannot open " + path);
    return in;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path == "-") {
        while (std::getline(std::cin, line)) lines.push_back(line);
        return lines;
    }
    std::ifstream in = open_or_usage(path);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

bool blank_or_comment(const std::string& s) {
    const std::size_t pos = s.find_first_not_of(" \t\r");
    return pos == std::string::npos || s[pos] == '#';
}

std::uint32_t icao_from_hex(const std::string& hex) {
    if (hex.empty() || hex.size() > 6) throw UsageFailure("icao must be 1..6 hex digits");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(hex, &used, 16);
    } catch (const std::exception&) {
        throw UsageFailure("bad icao " + hex);
    }
    if (used != hex.size()) throw UsageFailure("bad icao " + hex);
    return static_cast<std::uint32_t>(v);
}

std::string icao_hex(std::uint32_t icao) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%06x", icao);
    return buf;
}

std::string bytes_to_hex(const std::uint8_t* p, std::size_t n) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(digits[p[i] >> 4]);
        out.push_back(digits[p[i] & 0xf]);
    }
    return out;
}

template <std::size_t N>
std::array<std::uint8_t, N> bytes_from_hex(const std::string& hex) {
    if (hex.size() != 2 * N) throw UsageFailure("expected " + std::to_string(2 * N) + " hex digits");
    std::array<std::uint8_t, N> out{};
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw UsageFailure("bad hex digit");
    };
    for (std::size_t i = 0; i < N; ++i)
        out[i] = static_cast<std::uint8_t>(nib(hex[2 * i]) << 4 | nib(hex[2 * i + 1]));
    return out;
}

Key128 seed_from_global(std::uint64_t seed) {
    Key128 k{};
    for (int half = 0; half < 2; ++half) {
        std::uint64_t v = derive_seed(seed, 0xcabba, static_cast<std::uint64_t>(half));
        for (int b = 0; b < 8; ++b)
            k[static_cast<std::size_t>(8 * half + b)] =
                static_cast<std::uint8_t>(v >> (56 - 8 * b));
    }
    return k;
}

// ---------------------------------------------------------------- keychain

int cmd_keychain_gen(const GlobalOpts& g, const std::string& seed_hex, std::uint32_t length,
                     const std::string& out_path) {
    TeslaConfig cfg;
    cfg.chain_length = length;
    cfg.validate();
    const Key128 seed = seed_hex.empty() ? seed_from_global(g.seed) : key_from_hex(seed_hex);
    KeyChain chain = generate_chain(seed, cfg);
    if (!write_keychain(out_path, chain)) throw Error("cannot write " + out_path);
    if (pick_format(g, "text") == "json") {
        json j{{"path", out_path}, {"length", chain.length()}, {"pledge", key_to_hex(chain.pledge())}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "wrote " << out_path << " length " << chain.length() << " pledge "
                  << key_to_hex(chain.pledge()) << "\n";
    }
    return 0;
}

int cmd_keychain_verify(const GlobalOpts& g, const std::string& in_path, std::uint32_t index) {
    auto keys = read_keychain(in_path);
    if (!keys) {
        std::cerr << "error: unreadable keychain " << in_path << "\n";
        return 1;
    }
    const std::uint32_t n = static_cast<std::uint32_t>(keys->size()) - 1;
    if (index > n) throw UsageFailure("index exceeds chain length " + std::to_string(n));
    const Key128& key = (*keys)[n - index];
    const Key128& pledge = keys->back();
    bool valid = verify_pledge(key, index, pledge, n);
    // Whole-file consistency: every stored key must hash to its successor.
    for (std::size_t j = 0; valid && j + 1 < keys->size(); ++j)
        valid = f_hash((*keys)[j]) == (*keys)[j + 1];
    if (pick_format(g, "text") == "json") {
        json j{{"index", index}, {"valid", valid}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "index " << index << (valid ? " valid" : " INVALID") << "\n";
    }
    return valid ? 0 : 1;
}

// ------------------------------------------------------------------- frame

Frame frame_from_json(const json& j, int mac_len_bits) {
    const std::string type = j.at("type").get<std::string>();
    try {
        if (type == "A") {
            FrameA a;
            if (j.contains("adsb")) {
                a.adsb = bytes_from_hex<14>(j.at("adsb").get<std::string>());
            } else {
                a.adsb = make_df17(icao_from_hex(j.at("icao").get<std::string>()),
                                   std::stoull(j.at("me").get<std::string>(), nullptr, 16));
            }
            a.mac_bits = BitVec::from_hex(j.at("mac").get<std::string>(),
                                          static_cast<std::size_t>(mac_len_bits));
            a.seq = j.at("seq").get<std::uint8_t>();
            return a;
        }
        if (type == "B1") {
            FrameB1 b;
            b.icao = icao_from_hex(j.at("icao").get<std::string>());
            b.interval = j.at("interval").get<std::uint32_t>();
            b.key = key_from_hex(j.at("key").get<std::string>());
            return b;
        }
        if (type == "B2") {
            FrameB2 b;
            b.icao = icao_from_hex(j.at("icao").get<std::string>());
            b.interval = j.at("interval").get<std::uint32_t>();
            b.key = key_from_hex(j.at("key").get<std::string>());
            b.sig = sig_from_hex(j.at("sig").get<std::string>());
            return b;
        }
        if (type == "C") {
            FrameC c;
            c.icao = icao_from_hex(j.at("icao").get<std::string>());
            c.pubkey = pubkey_from_hex(j.at("pubkey").get<std::string>());
            c.sig = sig_from_hex(j.at("sig").get<std::string>());
            return c;
        }
    } catch (const AlignmentError& e) {
        throw UsageFailure(e.what());
    } catch (const InvalidConfig& e) {
        throw UsageFailure(e.what());
    }
    throw UsageFailure("unknown frame type " + type);
}

json frame_to_json(const Frame& frame) {
    json j;
    j["type"] = frame_type_name(frame_type(frame));
    if (const auto* a = std::get_if<FrameA>(&frame)) {
        j["adsb"] = bytes_to_hex(a->adsb.data(), a->adsb.size());
        j["icao"] = icao_hex(adsb_icao(a->adsb));
        j["mac"] = a->mac_bits.to_hex();
        j["seq"] = a->seq;
    } else if (const auto* b1 = std::get_if<FrameB1>(&frame)) {
        j["icao"] = icao_hex(b1->icao);
        j["interval"] = b1->interval;
        j["key"] = key_to_hex(b1->key);
    } else if (const auto* b2 = std::get_if<FrameB2>(&frame)) {
        j["icao"] = icao_hex(b2->icao);
        j["interval"] = b2->interval;
        j["key"] = key_to_hex(b2->key);
        j["sig"] = sig_to_hex(b2->sig);
    } else if (const auto* c = std::get_if<FrameC>(&frame)) {
        j["icao"] = icao_hex(c->icao);
        j["pubkey"] = pubkey_to_hex(c->pubkey);
        j["sig"] = sig_to_hex(c->sig);
    }
    return j;
}

int cmd_frame_encode(const GlobalOpts&, const std::string& in_path, int mac_len_bits) {
    CodecConfig cfg;
    cfg.mac_len_bits = mac_len_bits;
    for (const std::string& line : read_lines(in_path)) {
        if (blank_or_comment(line)) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw UsageFailure(std::string("bad json: ") + e.what());
        }
        Frame frame = frame_from_json(j, mac_len_bits);
        FramePackets pkt = encode_frame(frame, cfg);
        std::cout << frame_line(frame_type(frame), pkt) << "\n";
    }
    return 0;
}

ParsedFrameLine parse_line_or_fail(const std::string& line) {
    ParsedFrameLine p = parse_frame_line(line);
    switch (p.status) {
        case LineParse::ok:
        case LineParse::empty: return p;
        case LineParse::bad_hex: throw UsageFailure("bad hex in frame line");
        case LineParse::bad_type: throw Error("unknown frame type marker");
        case LineParse::truncated: throw Error("truncated frame line");
    }
    return p;
}

int cmd_frame_decode(const GlobalOpts& g, const std::string& in_path, int mac_len_bits) {
    CodecConfig cfg;
    cfg.mac_len_bits = mac_len_bits;
    json all = json::array();
    bool failures = false;
    for (const std::string& line : read_lines(in_path)) {
        ParsedFrameLine p = parse_line_or_fail(line);
        if (p.status == LineParse::empty) continue;
        FrameDecodeResult r = decode_frame(p.pkt.in_phase, p.pkt.quadrature, cfg);
        json j;
        if (r.ok()) {
            j = frame_to_json(*r.frame);
        } else {
            failures = true;
            j["type"] = frame_type_name(p.type);
        }
        j["status"] = r.status == DecodeStatus::ok              ? "ok"
                      : r.status == DecodeStatus::crc_mismatch  ? "crc_mismatch"
                      : r.status == DecodeStatus::rs_uncorrectable ? "rs_uncorrectable"
                                                                   : "unknown_frame_type";
        j["corrected_symbols"] = r.corrected_symbols;
        if (pick_format(g, "text") == "json")
            all.push_back(j);
        else
            std::cout << j.dump() << "\n";
    }
    if (pick_format(g, "text") == "json") std::cout << all.dump() << "\n";
    return failures ? 1 : 0;
}

// ------------------------------------------------------------------- modem

ModemConfig modem_config(int sps, int order, const std::string& encoding) {
    ModemConfig cfg;
    cfg.samples_per_symbol = sps;
    cfg.psk_order = order;
    cfg.encoding = encoding == "abs" ? PhaseEncoding::absolute : PhaseEncoding::differential;
    cfg.validate();
    return cfg;
}

int cmd_modem_tx(const GlobalOpts&, const std::string& in_path, const std::string& out_path,
                 int sps, int order, const std::string& encoding) {
    ModemConfig cfg = modem_config(sps, order, encoding);
    std::optional<ParsedFrameLine> got;
    for (const std::string& line : read_lines(in_path)) {
        ParsedFrameLine p = parse_line_or_fail(line);
        if (p.status == LineParse::empty) continue;
        if (got) throw UsageFailure("one frame line per signal file");
        got = std::move(p);
    }
    if (!got) throw Error("no frame line in input");
    BasebandSignal sig = modulate_frame(got->pkt, cfg);
    if (!write_iq(out_path, sig)) throw Error("cannot write " + out_path);
    std::cout << "wrote " << out_path << " samples " << sig.samples.size() << " sr "
              << fmt6(sig.sample_rate_hz) << "\n";
    return 0;
}

int cmd_modem_rx(const GlobalOpts& g, const std::string& in_path, int sps, int order,
                 const std::string& encoding, int mac_len_bits) {
    ModemConfig cfg = modem_config(sps, order, encoding);
    auto sig = read_iq(in_path);
    if (!sig) throw UsageFailure("cannot read sample file " + in_path + " (missing sidecar?)");
    FrameDemodResult dm = demodulate_frame(*sig, cfg);
    if (!dm.preamble_found) {
        std::cerr << "error: no preamble detected\n";
        return 1;
    }
    auto type = classify_frame(dm.in_phase);
    if (!type) {
        std::cerr << "error: demodulated bits do not form a known frame\n";
        return 1;
    }
    CodecConfig codec;
    codec.mac_len_bits = mac_len_bits;
    FrameDecodeResult r = decode_frame(dm.in_phase, dm.quadrature, codec);
    const std::string line = frame_line(*type, {dm.in_phase, dm.quadrature});
    if (pick_format(g, "text") == "json") {
        json j{{"line", line},
               {"status", r.ok() ? "ok" : "decode_failure"},
               {"corrected_symbols", r.corrected_symbols}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << line << "\n";
    }
    return r.ok() ? 0 : 1;
}

// --------------------------------------------------------------------- ber

std::vector<double> parse_ebno_spec(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double start = 0, step = 0, stop = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ss(spec);
        if (!(ss >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' || step <= 0)
            throw UsageFailure("bad --ebno range, want start:step:stop");
        for (double v = start; v <= stop + 1e-9; v += step) out.push_back(v);
        return out;
    }
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw UsageFailure("bad --ebno value " + tok);
        }
    }
    if (out.empty()) throw UsageFailure("empty --ebno list");
    return out;
}

int cmd_ber(const GlobalOpts& g, const std::string& orders_csv, const std::string& ebno_spec,
            std::uint64_t min_errors, double max_bits, int sps, const std::string& encoding,
            const std::string& mapping, int threads) {
    std::vector<int> orders;
    {
        std::istringstream ss(orders_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) orders.push_back(std::stoi(tok));
        if (orders.empty()) throw UsageFailure("empty --orders list");
    }
    BerSweepConfig cfg;
    cfg.ebno_db = parse_ebno_spec(ebno_spec);
    cfg.min_errors = min_errors;
    cfg.max_bits = static_cast<std::uint64_t>(max_bits);
    cfg.master_seed = g.seed;
    cfg.threads = threads;
    cfg.modem.samples_per_symbol = sps;
    cfg.modem.encoding = encoding == "abs" ? PhaseEncoding::absolute : PhaseEncoding::differential;
    cfg.modem.bit_mapping = mapping == "gray" ? BitMapping::gray : BitMapping::natural;

    std::vector<BerPoint> rows;
    for (int order : orders) {
        cfg.modem.psk_order = order;
        std::vector<BerPoint> pts = ber_sweep(cfg);
        rows.insert(rows.end(), pts.begin(), pts.end());
    }
    const std::string fmt = pick_format(g, "csv");
    if (fmt == "json") {
        json arr = json::array();
        for (const BerPoint& p : rows)
            arr.push_back(json{{"ebno_db", r6(p.ebno_db)},
                               {"order", p.psk_order},
                               {"bits", p.bits},
                               {"errors", p.errors},
                               {"ber", r6(p.ber)},
                               {"theory_ber", r6(p.theory_ber)},
                               {"ppm_bits", p.ppm_bits},
                               {"ppm_errors", p.ppm_errors},
                               {"ppm_ber", r6(p.ppm_ber)},
                               {"frames_lost", p.frames_lost}});
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << "ebno_db,order,bits,errors,ber,theory_ber,ppm_bits,ppm_errors,ppm_ber,"
                     "frames_lost\n";
        for (const BerPoint& p : rows)
            std::cout << fmt6(p.ebno_db) << ',' << p.psk_order << ',' << p.bits << ',' << p.errors
                      << ',' << fmt6(p.ber) << ',' << fmt6(p.theory_ber) << ',' << p.ppm_bits
                      << ',' << p.ppm_errors << ',' << fmt6(p.ppm_ber) << ',' << p.frames_lost
                      << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- rxsim

int cmd_rxsim(const GlobalOpts& g, const std::string& events_path, const std::string& ca_pub_hex,
              std::uint32_t horizon, std::uint32_t max_walk, int mac_len_bits) {
    ReceiverConfig rcfg;
    if (!ca_pub_hex.empty()) rcfg.ca_pub = pubkey_from_hex(ca_pub_hex);
    rcfg.buffer_horizon = horizon;
    rcfg.max_chain_walk = max_walk;
    CodecConfig codec;
    codec.mac_len_bits = mac_len_bits;

    std::map<std::uint32_t, std::unique_ptr<ReceiverContext>> rx;
    json events = json::array();
    const bool as_json = pick_format(g, "text") == "json";

    for (const std::string& line : read_lines(events_path)) {
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        std::uint32_t t = 0;
        if (!(ss >> t)) throw UsageFailure("event line must start with the rx interval");
        std::string rest;
        std::getline(ss, rest);
        ParsedFrameLine p = parse_line_or_fail(rest);
        if (p.status == LineParse::empty) throw Error("event line without a frame");
        FrameDecodeResult r = decode_frame(p.pkt.in_phase, p.pkt.quadrature, codec);
        if (!r.ok()) throw Error("undecodable frame in event script");
        const std::uint32_t icao = frame_icao(*r.frame);
        auto it = rx.find(icao);
        if (it == rx.end())
            it = rx.emplace(icao, std::make_unique<ReceiverContext>(icao, rcfg)).first;
        std::vector<VerdictUpdate> ups = it->second->ingest(*r.frame, t);

        json ev{{"t", t},
                {"icao", icao_hex(icao)},
                {"type", frame_type_name(frame_type(*r.frame))},
                {"state", rx_state_name(it->second->state())}};
        json jups = json::array();
        for (const VerdictUpdate& u : ups)
            jups.push_back(json{{"interval", u.interval},
                                {"seq", u.seq},
                                {"integrity", integrity_name(u.integrity)},
                                {"origin", u.authenticated_origin},
                                {"duplicate", u.duplicate},
                                {"expired", u.expired}});
        ev["updates"] = jups;
        if (as_json) {
            events.push_back(ev);
        } else {
            std::cout << "t=" << t << " icao=" << icao_hex(icao) << " type="
                      << frame_type_name(frame_type(*r.frame))
                      << " state=" << rx_state_name(it->second->state());
            for (const VerdictUpdate& u : ups) {
                std::cout << " [i=" << u.interval << " seq=" << static_cast<int>(u.seq) << " "
                          << integrity_name(u.integrity) << (u.authenticated_origin ? " origin" : "")
                          << (u.duplicate ? " dup" : "") << (u.expired ? " expired" : "") << "]";
            }
            std::cout << "\n";
        }
    }

    json finals = json::array();
    for (const auto& [icao, ctx] : rx) {
        json f{{"icao", icao_hex(icao)},
               {"state", rx_state_name(ctx->state())},
               {"interval", ctx->current_interval()},
               {"pending", ctx->pending_count()}};
        json streams = json::array();
        for (const KeyStream& s : ctx->streams())
            streams.push_back(json{{"id", s.id},
                                   {"verdict", stream_verdict_name(s.verdict)},
                                   {"keys", s.keys.size()}});
        f["streams"] = streams;
        json msgs = json::array();
        for (const MessageRecord& m : ctx->settled())
            msgs.push_back(json{{"interval", m.interval},
                                {"seq", m.seq},
                                {"integrity", integrity_name(m.integrity)},
                                {"origin", m.authenticated_origin}});
        f["settled"] = msgs;
        finals.push_back(f);
        if (!as_json) {
            std::cout << "final icao=" << icao_hex(icao) << " state=" << rx_state_name(ctx->state())
                      << " interval=" << ctx->current_interval() << " pending="
                      << ctx->pending_count() << "\n";
            for (const KeyStream& s : ctx->streams())
                std::cout << "  stream id=" << s.id << " verdict=" << stream_verdict_name(s.verdict)
                          << " keys=" << s.keys.size() << "\n";
            for (const MessageRecord& m : ctx->settled())
                std::cout << "  msg i=" << m.interval << " seq=" << static_cast<int>(m.seq) << " "
                          << integrity_name(m.integrity) << (m.authenticated_origin ? " origin" : "")
                          << "\n";
        }
    }
    if (as_json) std::cout << json{{"events", events}, {"final", finals}}.dump() << "\n";
    return 0;
}

// --------------------------------------------------------------------- cor

ScenarioParams scenario_from_flag(const std::string& flag) {
    if (flag == "s1") return scenario_preset(1);
    if (flag == "s2") return scenario_preset(2);
    if (flag == "s3") return scenario_preset(3);
    if (flag == "s4") return scenario_preset(4);
    std::ifstream in = open_or_usage(flag);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw UsageFailure(std::string("bad scenario json: ") + e.what());
    }
    ScenarioParams scn;
    scn.t_b1 = j.at("t_b1").get<double>();
    scn.t_b2 = j.at("t_b2").get<double>();
    scn.t_c = j.at("t_c").get<double>();
    scn.validate();
    return scn;
}

int cmd_cor(const GlobalOpts& g, const std::string& capture_path, const std::string& synth_spec,
            const std::string& scenario_flag, const std::string& report, double window_s) {
    if (capture_path.empty() == synth_spec.empty())
        throw UsageFailure("exactly one of --capture and --synth is required");
    TrafficCapture cap;
    if (!synth_spec.empty()) {
        int n = 0;
        double rate = 0, dur = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ss(synth_spec);
        if (!(ss >> n >> c1 >> rate >> c2 >> dur) || c1 != ',' || c2 != ',')
            throw UsageFailure("bad --synth, want n,msgs_per_s,duration_s");
        cap = synth_capture(n, rate, dur, g.seed);
    } else {
        cap = ingest_capture_file(capture_path);
    }
    ScenarioParams scn = scenario_from_flag(scenario_flag);
    const std::string fmt = pick_format(g, "csv");

    if (report == "hourly") {
        std::vector<HourlyCor> legacy = cor_hourly(cap, nullptr);
        std::vector<HourlyCor> overlay = cor_hourly(cap, &scn);
        if (fmt == "json") {
            json arr = json::array();
            for (std::size_t i = 0; i < legacy.size(); ++i)
                arr.push_back(json{{"hour", legacy[i].hour},
                                   {"gamma_adsb_mean", r6(legacy[i].mean)},
                                   {"gamma_adsb_lo", r6(legacy[i].lo)},
                                   {"gamma_adsb_hi", r6(legacy[i].hi)},
                                   {"gamma_cabba_mean", r6(overlay[i].mean)},
                                   {"gamma_cabba_lo", r6(overlay[i].lo)},
                                   {"gamma_cabba_hi", r6(overlay[i].hi)}});
            std::cout << arr.dump() << "\n";
        } else {
            std::cout << "hour,gamma_adsb_mean,gamma_adsb_lo,gamma_adsb_hi,gamma_cabba_mean,"
                         "gamma_cabba_lo,gamma_cabba_hi\n";
            for (std::size_t i = 0; i < legacy.size(); ++i)
                std::cout << legacy[i].hour << ',' << fmt6(legacy[i].mean) << ','
                          << fmt6(legacy[i].lo) << ',' << fmt6(legacy[i].hi) << ','
                          << fmt6(overlay[i].mean) << ',' << fmt6(overlay[i].lo) << ','
                          << fmt6(overlay[i].hi) << "\n";
        }
        return 0;
    }
    if (report != "windows") throw UsageFailure("--report must be windows or hourly");
    TrafficCapture sized = cap;
    sized.window_s = window_s;
    std::vector<CorWindow> wins = cor_windows(sized, window_s, scn);
    if (fmt == "json") {
        json arr = json::array();
        for (const CorWindow& w : wins)
            arr.push_back(json{{"t0", r6(w.t0)},
                               {"gamma_adsb", r6(w.cor.gamma_adsb)},
                               {"gamma_cabba", r6(w.cor.gamma_cabba)},
                               {"overhead_frac", r6(w.cor.packet_overhead_frac)},
                               {"n_a", r6(w.cor.n_a)},
                               {"n_b1", r6(w.cor.n_b1)},
                               {"n_b2", r6(w.cor.n_b2)},
                               {"n_c", r6(w.cor.n_c)}});
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << "t0,gamma_adsb,gamma_cabba,overhead_frac,n_a,n_b1,n_b2,n_c\n";
        for (const CorWindow& w : wins)
            std::cout << fmt6(w.t0) << ',' << fmt6(w.cor.gamma_adsb) << ','
                      << fmt6(w.cor.gamma_cabba) << ',' << fmt6(w.cor.packet_overhead_frac) << ','
                      << fmt6(w.cor.n_a) << ',' << fmt6(w.cor.n_b1) << ',' << fmt6(w.cor.n_b2)
                      << ',' << fmt6(w.cor.n_c) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ safety

int cmd_safety(const GlobalOpts& g, const std::string& domain_flag, const std::string& ecdf_path,
               const std::string& scenario_flag) {
    SafetyDomain domain;
    if (domain_flag == "tcas")
        domain = SafetyDomain::tcas;
    else if (domain_flag == "atc")
        domain = SafetyDomain::atc;
    else
        throw UsageFailure("--domain must be tcas or atc");
    auto ecdf = read_ecdf_csv(ecdf_path);
    if (!ecdf) throw UsageFailure("unreadable ecdf csv " + ecdf_path);
    ScenarioParams scn = scenario_from_flag(scenario_flag);
    std::vector<SafetyRow> rows = safety_table(domain, scn, *ecdf);
    const std::string fmt = pick_format(g, "text");
    if (fmt == "json") {
        json arr = json::array();
        for (const SafetyRow& r : rows)
            arr.push_back(json{{"name", r.name},
                               {"radius_km", r6(r.radius_km)},
                               {"p", r6(r.p)},
                               {"delay_tb1_s", r6(r.delay_tb1_s)},
                               {"window_lo_s", r6(r.window_lo_s)},
                               {"window_hi_s", r6(r.window_hi_s)},
                               {"los_lo_min", r6(r.los_lo_min)},
                               {"los_hi_min", r6(r.los_hi_min)},
                               {"delay_tc_s", r6(r.delay_tc_s)}});
        std::cout << arr.dump() << "\n";
    } else if (fmt == "csv") {
        std::cout << "name,radius_km,p,delay_tb1_s,window_lo_s,window_hi_s,los_lo_min,los_hi_min,"
                     "delay_tc_s\n";
        for (const SafetyRow& r : rows)
            std::cout << r.name << ',' << fmt6(r.radius_km) << ',' << fmt6(r.p) << ','
                      << fmt6(r.delay_tb1_s) << ',' << fmt6(r.window_lo_s) << ','
                      << fmt6(r.window_hi_s) << ',' << fmt6(r.los_lo_min) << ','
                      << fmt6(r.los_hi_min) << ',' << fmt6(r.delay_tc_s) << "\n";
    } else {
        for (const SafetyRow& r : rows)
            std::cout << r.name << " radius=" << fmt6(r.radius_km) << "km p=" << fmt6(r.p)
                      << " delay_tb1=" << fmt6(r.delay_tb1_s) << "s window=["
                      << fmt6(r.window_lo_s) << "," << fmt6(r.window_hi_s) << "]s los=["
                      << fmt6(r.los_lo_min) << "," << fmt6(r.los_hi_min) << "]min delay_tc="
                      << fmt6(r.delay_tc_s) << "s\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cabba: secure ADS-B broadcast pipeline"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--seed", g.seed, "master seed for all randomness")->capture_default_str();
    app.add_option("--format", g.format, "output format: text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // keychain
    CLI::App* keychain = app.add_subcommand("keychain", "TESLA key chain tools");
    keychain->fallthrough();
    keychain->require_subcommand(1);
    std::string kc_seed_hex, kc_out = "keychain.txt", kc_in = "keychain.txt";
    std::uint32_t kc_length = 720, kc_index = 0;
    CLI::App* kc_gen = keychain->add_subcommand("gen", "generate a chain file");
    kc_gen->fallthrough();
    kc_gen->add_option("--seed-hex", kc_seed_hex, "128-bit chain seed as 32 hex digits");
    kc_gen->add_option("--length", kc_length, "chain length N")->capture_default_str();
    kc_gen->add_option("--out", kc_out, "output path")->capture_default_str();
    CLI::App* kc_verify = keychain->add_subcommand("verify", "verify a key against the pledge");
    kc_verify->fallthrough();
    kc_verify->add_option("--in", kc_in, "chain file")->capture_default_str();
    kc_verify->add_option("--index", kc_index, "interval index of the key to check")->required();

    // frame
    CLI::App* frame = app.add_subcommand("frame", "frame codec");
    frame->fallthrough();
    frame->require_subcommand(1);
    std::string fr_in = "-";
    int fr_mac_bits = 196;
    CLI::App* fr_enc = frame->add_subcommand("encode", "json lines to frame lines");
    fr_enc->fallthrough();
    fr_enc->add_option("--in", fr_in, "input path or - for stdin")->capture_default_str();
    fr_enc->add_option("--mac-bits", fr_mac_bits, "lambda")->capture_default_str();
    CLI::App* fr_dec = frame->add_subcommand("decode", "frame lines to json lines");
    fr_dec->fallthrough();
    fr_dec->add_option("--in", fr_in, "input path or - for stdin")->capture_default_str();
    fr_dec->add_option("--mac-bits", fr_mac_bits, "lambda")->capture_default_str();

    // modem
    CLI::App* modem = app.add_subcommand("modem", "baseband modulation");
    modem->fallthrough();
    modem->require_subcommand(1);
    std::string md_in = "-", md_iq, md_encoding = "diff";
    int md_sps = 10, md_order = 8, md_mac_bits = 196;
    CLI::App* md_tx = modem->add_subcommand("tx", "frame line to I/Q sample file");
    md_tx->fallthrough();
    md_tx->add_option("--in", md_in, "frame line input")->capture_default_str();
    md_tx->add_option("--out", md_iq, "output .iq path")->required();
    CLI::App* md_rx = modem->add_subcommand("rx", "I/Q sample file to frame line");
    md_rx->fallthrough();
    md_rx->add_option("--in", md_iq, "input .iq path")->required();
    md_rx->add_option("--mac-bits", md_mac_bits, "lambda")->capture_default_str();
    for (CLI::App* sub : {md_tx, md_rx}) {
        sub->add_option("--sps", md_sps, "samples per symbol")->capture_default_str();
        sub->add_option("--order", md_order, "PSK order")->check(CLI::IsMember({8, 16}));
        sub->add_option("--encoding", md_encoding, "diff or abs")
            ->check(CLI::IsMember({"diff", "abs"}));
    }

    // ber
    CLI::App* ber = app.add_subcommand("ber", "Monte-Carlo BER sweep");
    ber->fallthrough();
    std::string ber_orders = "8,16", ber_ebno = "4:1:16", ber_encoding = "diff",
                ber_mapping = "gray";
    std::uint64_t ber_min_errors = 100;
    double ber_max_bits = 1e7;
    int ber_sps = 10, ber_threads = 1;
    ber->add_option("--orders", ber_orders, "comma list of PSK orders")->capture_default_str();
    ber->add_option("--ebno", ber_ebno, "start:step:stop or comma list, dB")->capture_default_str();
    ber->add_option("--min-errors", ber_min_errors, "errors to collect per point")
        ->capture_default_str();
    ber->add_option("--max-bits", ber_max_bits, "bit budget per point")->capture_default_str();
    ber->add_option("--sps", ber_sps, "samples per symbol")->capture_default_str();
    ber->add_option("--encoding", ber_encoding, "diff or abs")
        ->check(CLI::IsMember({"diff", "abs"}));
    ber->add_option("--mapping", ber_mapping, "natural or gray")
        ->check(CLI::IsMember({"natural", "gray"}));
    ber->add_option("--threads", ber_threads, "worker threads")->capture_default_str();

    // rxsim
    CLI::App* rxsim = app.add_subcommand("rxsim", "replay a frame script through the receiver");
    rxsim->fallthrough();
    std::string rx_events, rx_ca_pub;
    std::uint32_t rx_horizon = 3, rx_walk = 720;
    int rx_mac_bits = 196;
    rxsim->add_option("--events", rx_events, "script: '<interval> <frame line>' per row")
        ->required();
    rxsim->add_option("--ca-pub", rx_ca_pub, "trusted CA public key, 64 hex digits");
    rxsim->add_option("--horizon", rx_horizon, "buffer horizon, intervals")->capture_default_str();
    rxsim->add_option("--max-walk", rx_walk, "longest hash walk")->capture_default_str();
    rxsim->add_option("--mac-bits", rx_mac_bits, "lambda")->capture_default_str();

    // cor
    CLI::App* cor = app.add_subcommand("cor", "channel occupancy analysis");
    cor->fallthrough();
    std::string cor_capture, cor_synth, cor_scn = "s4", cor_report = "windows";
    double cor_window = 30.0;
    cor->add_option("--capture", cor_capture, "capture csv: 'timestamp,icao24' rows");
    cor->add_option("--synth", cor_synth, "synthetic capture: n,msgs_per_s,duration_s");
    cor->add_option("--scenario", cor_scn, "s1..s4 or a json file with t_b1,t_b2,t_c")
        ->capture_default_str();
    cor->add_option("--report", cor_report, "windows or hourly")->capture_default_str();
    cor->add_option("--window", cor_window, "window length, seconds")->capture_default_str();

    // safety
    CLI::App* safety = app.add_subcommand("safety", "authentication delay vs safety windows");
    safety->fallthrough();
    std::string sf_domain, sf_ecdf, sf_scn = "s4";
    safety->add_option("--domain", sf_domain, "tcas or atc")->required();
    safety->add_option("--ecdf", sf_ecdf, "packet-loss ecdf csv")->required();
    safety->add_option("--scenario", sf_scn, "s1..s4 or a json file")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (kc_gen->parsed()) return cmd_keychain_gen(g, kc_seed_hex, kc_length, kc_out);
        if (kc_verify->parsed()) return cmd_keychain_verify(g, kc_in, kc_index);
        if (fr_enc->parsed()) return cmd_frame_encode(g, fr_in, fr_mac_bits);
        if (fr_dec->parsed()) return cmd_frame_decode(g, fr_in, fr_mac_bits);
        if (md_tx->parsed()) return cmd_modem_tx(g, md_in, md_iq, md_sps, md_order, md_encoding);
        if (md_rx->parsed())
            return cmd_modem_rx(g, md_iq, md_sps, md_order, md_encoding, md_mac_bits);
        if (ber->parsed())
            return cmd_ber(g, ber_orders, ber_ebno, ber_min_errors, ber_max_bits, ber_sps,
                           ber_encoding, ber_mapping, ber_threads);
        if (rxsim->parsed())
            return cmd_rxsim(g, rx_events, rx_ca_pub, rx_horizon, rx_walk, rx_mac_bits);
        if (cor->parsed())
            return cmd_cor(g, cor_capture, cor_synth, cor_scn, cor_report, cor_window);
        if (safety->parsed()) return cmd_safety(g, sf_domain, sf_ecdf, sf_scn);
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidConfig& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
