// Python bindings. Fixed-width byte arrays (keys, signatures, ADS-B
// frames) cross the boundary as Python bytes; everything else maps to
// the registered classes below.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

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
#include "cabba/tesla.hpp"

namespace py = pybind11;
using namespace cabba;

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> arr_from_bytes(const py::bytes& b, const char* what) {
    const std::string s = b;
    if (s.size() != N)
        throw InvalidConfig(std::string(what) + " must be " + std::to_string(N) + " bytes");
    std::array<std::uint8_t, N> a{};
    std::copy(s.begin(), s.end(), a.begin());
    return a;
}

template <std::size_t N>
py::bytes arr_to_bytes(const std::array<std::uint8_t, N>& a) {
    return py::bytes(reinterpret_cast<const char*>(a.data()), N);
}

// Read/write struct member of std::array<uint8_t, N> exposed as bytes.
#define BYTES_FIELD(CLS, FIELD, N)                                              \
    def_property(                                                               \
        #FIELD, [](const CLS& x) { return arr_to_bytes<N>(x.FIELD); },          \
        [](CLS& x, const py::bytes& b) { x.FIELD = arr_from_bytes<N>(b, #FIELD); })

}  // namespace

PYBIND11_MODULE(_cabba, m) {
    m.doc() = "Authenticated ADS-B broadcast stack: TESLA keying, frame codec, "
              "PPM/D8PSK modem, receiver state machine, airspace analyses";

    auto exc_base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidConfig>(m, "InvalidConfig", exc_base);
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", exc_base);
    py::register_exception<MacTooLong>(m, "MacTooLong", exc_base);
    py::register_exception<InvalidOrder>(m, "InvalidOrder", exc_base);
    py::register_exception<LayoutViolation>(m, "LayoutViolation", exc_base);
    py::register_exception<SymbolAlignment>(m, "SymbolAlignment", exc_base);
    py::register_exception<AlignmentError>(m, "AlignmentError", exc_base);
    py::register_exception<NoPreamble>(m, "NoPreamble", exc_base);
    py::register_exception<ZeroValidRows>(m, "ZeroValidRows", exc_base);

    // ---- bits ----
    py::class_<BitVec>(m, "BitVec")
        .def(py::init<>())
        .def_static("from_hex", &BitVec::from_hex, py::arg("hex"), py::arg("nbits"))
        .def("to_hex", &BitVec::to_hex)
        .def("push_back", &BitVec::push_back)
        .def("__len__", &BitVec::size)
        .def("__getitem__",
             [](const BitVec& v, std::size_t i) {
                 if (i >= v.size()) throw py::index_error();
                 return v[i];
             })
        .def("__eq__", [](const BitVec& a, const BitVec& b) { return a == b; })
        .def("__repr__", [](const BitVec& v) {
            return "BitVec(" + std::to_string(v.size()) + " bits, 0x" + v.to_hex() + ")";
        });

    // ---- adsb ----
    m.attr("ADSB_FRAME_BITS") = kAdsbFrameBits;
    m.def(
        "make_df17",
        [](std::uint32_t icao, std::uint64_t me56) { return arr_to_bytes<14>(make_df17(icao, me56)); },
        py::arg("icao"), py::arg("me56"));
    m.def("adsb_crc_ok",
          [](const py::bytes& f) { return adsb_crc_ok(arr_from_bytes<14>(f, "adsb frame")); });
    m.def("adsb_icao",
          [](const py::bytes& f) { return adsb_icao(arr_from_bytes<14>(f, "adsb frame")); });
    m.def("adsb_df", [](const py::bytes& f) { return adsb_df(arr_from_bytes<14>(f, "adsb frame")); });

    // ---- tesla ----
    py::class_<TeslaConfig>(m, "TeslaConfig")
        .def(py::init<>())
        .def_readwrite("chain_length", &TeslaConfig::chain_length)
        .def_readwrite("interval_s", &TeslaConfig::interval_s)
        .def_readwrite("mac_len_bits", &TeslaConfig::mac_len_bits)
        .def("validate", &TeslaConfig::validate);

    py::class_<KeyChain>(m, "KeyChain")
        .def("length", &KeyChain::length)
        .def("key",
             [](const KeyChain& c, std::uint32_t i) { return arr_to_bytes<16>(c.key(i)); },
             py::arg("interval"))
        .def("pledge", [](const KeyChain& c) { return arr_to_bytes<16>(c.pledge()); })
        .def("seed", [](const KeyChain& c) { return arr_to_bytes<16>(c.seed()); });

    py::class_<AuthKey>(m, "AuthKey")
        .def_property_readonly("key", [](const AuthKey& a) { return arr_to_bytes<16>(a.key); })
        .def_readonly("interval", &AuthKey::interval);

    py::class_<MacTag>(m, "MacTag")
        .def(py::init([](const BitVec& bits, std::uint8_t seq, std::uint32_t interval) {
                 MacTag t;
                 t.bits = bits;
                 t.seq = seq;
                 t.interval = interval;
                 return t;
             }),
             py::arg("bits"), py::arg("seq"), py::arg("interval"))
        .def_readwrite("bits", &MacTag::bits)
        .def_readwrite("seq", &MacTag::seq)
        .def_readwrite("interval", &MacTag::interval);

    m.def("key_from_hex", [](const std::string& h) { return arr_to_bytes<16>(key_from_hex(h)); });
    m.def("key_to_hex", [](const py::bytes& k) { return key_to_hex(arr_from_bytes<16>(k, "key")); });
    m.def("f_hash", [](const py::bytes& k) { return arr_to_bytes<16>(f_hash(arr_from_bytes<16>(k, "key"))); });
    m.def("fprime_hash",
          [](const py::bytes& k) { return arr_to_bytes<16>(fprime_hash(arr_from_bytes<16>(k, "key"))); });
    m.def(
        "f_hash_iter",
        [](const py::bytes& k, std::uint32_t times) {
            return arr_to_bytes<16>(f_hash_iter(arr_from_bytes<16>(k, "key"), times));
        },
        py::arg("key"), py::arg("times"));
    m.def(
        "generate_chain",
        [](const py::bytes& seed, const TeslaConfig& cfg) {
            return generate_chain(arr_from_bytes<16>(seed, "seed"), cfg);
        },
        py::arg("seed"), py::arg("config") = TeslaConfig{});
    m.def(
        "verify_pledge",
        [](const py::bytes& candidate, std::uint32_t claimed_index, const py::bytes& pledge,
           std::uint32_t max_index) {
            return verify_pledge(arr_from_bytes<16>(candidate, "candidate"), claimed_index,
                                 arr_from_bytes<16>(pledge, "pledge"), max_index);
        },
        py::arg("candidate"), py::arg("claimed_index"), py::arg("pledge"), py::arg("max_index"));
    m.def(
        "derive_auth_key",
        [](const py::bytes& key, std::uint32_t interval) {
            return derive_auth_key(arr_from_bytes<16>(key, "interval key"), interval);
        },
        py::arg("interval_key"), py::arg("interval"));
    m.def("compute_mac", &compute_mac, py::arg("message"), py::arg("auth_key"), py::arg("seq"),
          py::arg("mac_len_bits"));
    m.def(
        "verify_mac",
        [](const BitVec& message, const MacTag& tag, const py::bytes& interval_key) {
            return verify_mac(message, tag, arr_from_bytes<16>(interval_key, "interval key"));
        },
        py::arg("message"), py::arg("tag"), py::arg("interval_key"));
    m.def(
        "same_origin",
        [](const py::bytes& key_a, std::uint32_t ia, const py::bytes& key_b, std::uint32_t ib) {
            return same_origin(arr_from_bytes<16>(key_a, "key_a"), ia,
                               arr_from_bytes<16>(key_b, "key_b"), ib);
        },
        py::arg("key_a"), py::arg("interval_a"), py::arg("key_b"), py::arg("interval_b"));

    // ---- pki ----
    py::class_<KeyPair>(m, "KeyPair")
        .def_property_readonly("pub", [](const KeyPair& k) { return arr_to_bytes<32>(k.pub); })
        .def_property_readonly("sec", [](const KeyPair& k) { return arr_to_bytes<64>(k.sec); });

    py::class_<CertAuthority>(m, "CertAuthority")
        .def_static(
            "from_seed",
            [](const py::bytes& seed) { return CertAuthority::from_seed(arr_from_bytes<32>(seed, "seed")); },
            py::arg("seed"))
        .def_readonly("keys", &CertAuthority::keys);

    py::class_<AircraftIdentity>(m, "AircraftIdentity")
        .def_readonly("icao", &AircraftIdentity::icao)
        .def_readonly("keys", &AircraftIdentity::keys)
        .def_property_readonly("certificate",
                               [](const AircraftIdentity& a) { return arr_to_bytes<64>(a.certificate); });

    m.def(
        "make_identity",
        [](const CertAuthority& ca, std::uint32_t icao, const py::bytes& seed) {
            return make_identity(ca, icao, arr_from_bytes<32>(seed, "seed"));
        },
        py::arg("ca"), py::arg("icao"), py::arg("seed"));
    m.def(
        "verify_certificate",
        [](const py::bytes& ca_pub, const py::bytes& cert, const py::bytes& aircraft_pub) {
            return verify_certificate(arr_from_bytes<32>(ca_pub, "ca_pub"),
                                      arr_from_bytes<64>(cert, "certificate"),
                                      arr_from_bytes<32>(aircraft_pub, "aircraft_pub"));
        },
        py::arg("ca_pub"), py::arg("certificate"), py::arg("aircraft_pub"));
    m.def(
        "sign_interval_key",
        [](const py::bytes& sec, const py::bytes& key) {
            return arr_to_bytes<64>(sign_interval_key(arr_from_bytes<64>(sec, "secret key"),
                                                      arr_from_bytes<16>(key, "interval key")));
        },
        py::arg("aircraft_sec"), py::arg("interval_key"));
    m.def(
        "verify_interval_key",
        [](const py::bytes& pub, const py::bytes& sig, const py::bytes& key) {
            return verify_interval_key(arr_from_bytes<32>(pub, "aircraft_pub"),
                                       arr_from_bytes<64>(sig, "signature"),
                                       arr_from_bytes<16>(key, "interval key"));
        },
        py::arg("aircraft_pub"), py::arg("signature"), py::arg("interval_key"));
    m.def("pubkey_from_hex",
          [](const std::string& h) { return arr_to_bytes<32>(pubkey_from_hex(h)); });
    m.def("pubkey_to_hex",
          [](const py::bytes& k) { return pubkey_to_hex(arr_from_bytes<32>(k, "public key")); });

    // ---- frames ----
    py::enum_<FrameType>(m, "FrameType")
        .value("A", FrameType::A)
        .value("B1", FrameType::B1)
        .value("B2", FrameType::B2)
        .value("C", FrameType::C);

    py::class_<FrameA>(m, "FrameA")
        .def(py::init<>())
        .BYTES_FIELD(FrameA, adsb, 14)
        .def_readwrite("mac_bits", &FrameA::mac_bits)
        .def_readwrite("seq", &FrameA::seq)
        .def("__eq__", [](const FrameA& a, const FrameA& b) { return a == b; });

    py::class_<FrameB1>(m, "FrameB1")
        .def(py::init<>())
        .def_readwrite("icao", &FrameB1::icao)
        .def_readwrite("interval", &FrameB1::interval)
        .BYTES_FIELD(FrameB1, key, 16)
        .def("__eq__", [](const FrameB1& a, const FrameB1& b) { return a == b; });

    py::class_<FrameB2>(m, "FrameB2")
        .def(py::init<>())
        .def_readwrite("icao", &FrameB2::icao)
        .def_readwrite("interval", &FrameB2::interval)
        .BYTES_FIELD(FrameB2, key, 16)
        .BYTES_FIELD(FrameB2, sig, 64)
        .def("__eq__", [](const FrameB2& a, const FrameB2& b) { return a == b; });

    py::class_<FrameC>(m, "FrameC")
        .def(py::init<>())
        .def_readwrite("icao", &FrameC::icao)
        .BYTES_FIELD(FrameC, pubkey, 32)
        .BYTES_FIELD(FrameC, sig, 64)
        .def("__eq__", [](const FrameC& a, const FrameC& b) { return a == b; });

    py::class_<FramePackets>(m, "FramePackets")
        .def(py::init<>())
        .def_readwrite("in_phase", &FramePackets::in_phase)
        .def_readwrite("quadrature", &FramePackets::quadrature);

    py::class_<CodecConfig>(m, "CodecConfig")
        .def(py::init<>())
        .def_readwrite("mac_len_bits", &CodecConfig::mac_len_bits);

    py::enum_<DecodeStatus>(m, "DecodeStatus")
        .value("ok", DecodeStatus::ok)
        .value("unknown_frame_type", DecodeStatus::unknown_frame_type)
        .value("crc_mismatch", DecodeStatus::crc_mismatch)
        .value("rs_uncorrectable", DecodeStatus::rs_uncorrectable);

    py::class_<FrameDecodeResult>(m, "FrameDecodeResult")
        .def_readonly("status", &FrameDecodeResult::status)
        .def_readonly("frame", &FrameDecodeResult::frame)
        .def_readonly("corrected_symbols", &FrameDecodeResult::corrected_symbols)
        .def("ok", &FrameDecodeResult::ok);

    m.def("encode_frame", &encode_frame, py::arg("frame"), py::arg("config") = CodecConfig{});
    m.def("decode_frame", &decode_frame, py::arg("in_phase"), py::arg("quadrature"),
          py::arg("config") = CodecConfig{});
    m.def("classify_frame", &classify_frame, py::arg("in_phase"));
    m.def("frame_airtime_us", &frame_airtime_us);
    m.def("in_phase_bits", &in_phase_bits);
    m.def("frame_type_name", &frame_type_name);

    // ---- modem ----
    py::enum_<PhaseEncoding>(m, "PhaseEncoding")
        .value("absolute", PhaseEncoding::absolute)
        .value("differential", PhaseEncoding::differential);

    py::enum_<BitMapping>(m, "BitMapping")
        .value("natural", BitMapping::natural)
        .value("gray", BitMapping::gray);

    py::class_<ModemConfig>(m, "ModemConfig")
        .def(py::init<>())
        .def_readwrite("samples_per_symbol", &ModemConfig::samples_per_symbol)
        .def_readwrite("psk_order", &ModemConfig::psk_order)
        .def_readwrite("encoding", &ModemConfig::encoding)
        .def_readwrite("bit_mapping", &ModemConfig::bit_mapping)
        .def_readwrite("preamble_threshold", &ModemConfig::preamble_threshold)
        .def("bits_per_symbol", &ModemConfig::bits_per_symbol)
        .def("validate", &ModemConfig::validate);

    py::class_<BasebandSignal>(m, "BasebandSignal")
        .def(py::init<>())
        .def_readwrite("samples", &BasebandSignal::samples)
        .def_readwrite("sample_rate_hz", &BasebandSignal::sample_rate_hz)
        .def("__len__", [](const BasebandSignal& s) { return s.samples.size(); });

    py::class_<PpmDemodResult>(m, "PpmDemodResult")
        .def_readonly("preamble_found", &PpmDemodResult::preamble_found)
        .def_readonly("bits", &PpmDemodResult::bits);

    py::class_<FrameDemodResult>(m, "FrameDemodResult")
        .def_readonly("preamble_found", &FrameDemodResult::preamble_found)
        .def_readonly("in_phase", &FrameDemodResult::in_phase)
        .def_readonly("quadrature", &FrameDemodResult::quadrature);

    m.def("ppm_modulate", &ppm_modulate, py::arg("bits"), py::arg("config") = ModemConfig{});
    m.def("ppm_demodulate", &ppm_demodulate, py::arg("signal"), py::arg("config") = ModemConfig{});
    m.def("modulate_frame", &modulate_frame, py::arg("packets"), py::arg("config") = ModemConfig{});
    m.def("demodulate_frame", &demodulate_frame, py::arg("signal"), py::arg("config") = ModemConfig{});

    // ---- channel ----
    m.def("theoretical_psk_ber", &theoretical_psk_ber, py::arg("order"), py::arg("ebno_db"));

    py::class_<BerPoint>(m, "BerPoint")
        .def_readonly("ebno_db", &BerPoint::ebno_db)
        .def_readonly("psk_order", &BerPoint::psk_order)
        .def_readonly("bits", &BerPoint::bits)
        .def_readonly("errors", &BerPoint::errors)
        .def_readonly("ppm_bits", &BerPoint::ppm_bits)
        .def_readonly("ppm_errors", &BerPoint::ppm_errors)
        .def_readonly("frames_lost", &BerPoint::frames_lost)
        .def_readonly("ber", &BerPoint::ber)
        .def_readonly("ppm_ber", &BerPoint::ppm_ber)
        .def_readonly("theory_ber", &BerPoint::theory_ber);

    py::class_<BerSweepConfig>(m, "BerSweepConfig")
        .def(py::init<>())
        .def_readwrite("ebno_db", &BerSweepConfig::ebno_db)
        .def_readwrite("modem", &BerSweepConfig::modem)
        .def_readwrite("min_errors", &BerSweepConfig::min_errors)
        .def_readwrite("max_bits", &BerSweepConfig::max_bits)
        .def_readwrite("master_seed", &BerSweepConfig::master_seed)
        .def_readwrite("frame_bits", &BerSweepConfig::frame_bits)
        .def_readwrite("frames_per_batch", &BerSweepConfig::frames_per_batch)
        .def_readwrite("threads", &BerSweepConfig::threads);

    m.def("ber_sweep", &ber_sweep, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    // ---- protocol ----
    py::class_<Transmitter>(m, "Transmitter")
        .def(py::init<AircraftIdentity, KeyChain, TeslaConfig, CodecConfig>(), py::arg("identity"),
             py::arg("chain"), py::arg("tesla") = TeslaConfig{}, py::arg("codec") = CodecConfig{})
        .def(
            "make_a",
            [](Transmitter& tx, const py::bytes& adsb, std::uint32_t interval) {
                return tx.make_a(arr_from_bytes<14>(adsb, "adsb frame"), interval);
            },
            py::arg("adsb"), py::arg("interval"))
        .def("make_b1", &Transmitter::make_b1, py::arg("interval"))
        .def("make_b2", &Transmitter::make_b2, py::arg("interval"))
        .def("make_c", &Transmitter::make_c)
        .def_property_readonly("identity", &Transmitter::identity);

    // ---- receiver ----
    py::enum_<RxState>(m, "RxState")
        .value("S0", RxState::S0)
        .value("S1", RxState::S1)
        .value("S2", RxState::S2)
        .value("S3", RxState::S3)
        .value("S4", RxState::S4);

    py::enum_<Integrity>(m, "Integrity")
        .value("unknown", Integrity::unknown)
        .value("ok", Integrity::ok)
        .value("failed", Integrity::failed);

    py::enum_<StreamVerdict>(m, "StreamVerdict")
        .value("unverified", StreamVerdict::unverified)
        .value("authenticated", StreamVerdict::authenticated)
        .value("impostor_candidate", StreamVerdict::impostor_candidate);

    py::class_<ReceiverConfig>(m, "ReceiverConfig")
        .def(py::init<>())
        .BYTES_FIELD(ReceiverConfig, ca_pub, 32)
        .def_readwrite("buffer_horizon", &ReceiverConfig::buffer_horizon)
        .def_readwrite("max_chain_walk", &ReceiverConfig::max_chain_walk);

    py::class_<KeyStream>(m, "KeyStream")
        .def_readonly("id", &KeyStream::id)
        .def_readonly("verdict", &KeyStream::verdict)
        .def_property_readonly("keys", [](const KeyStream& s) {
            py::dict d;
            for (const auto& [interval, key] : s.keys) d[py::int_(interval)] = arr_to_bytes<16>(key);
            return d;
        });

    py::class_<MessageRecord>(m, "MessageRecord")
        .def_property_readonly("adsb", [](const MessageRecord& r) { return arr_to_bytes<14>(r.adsb); })
        .def_readonly("mac_bits", &MessageRecord::mac_bits)
        .def_readonly("seq", &MessageRecord::seq)
        .def_readonly("interval", &MessageRecord::interval)
        .def_readonly("integrity", &MessageRecord::integrity)
        .def_readonly("authenticated_origin", &MessageRecord::authenticated_origin)
        .def_readonly("duplicate", &MessageRecord::duplicate)
        .def_readonly("expired", &MessageRecord::expired)
        .def_readonly("stream_id", &MessageRecord::stream_id);

    py::class_<VerdictUpdate>(m, "VerdictUpdate")
        .def_readonly("interval", &VerdictUpdate::interval)
        .def_readonly("seq", &VerdictUpdate::seq)
        .def_readonly("integrity", &VerdictUpdate::integrity)
        .def_readonly("authenticated_origin", &VerdictUpdate::authenticated_origin)
        .def_readonly("stream_id", &VerdictUpdate::stream_id)
        .def_readonly("duplicate", &VerdictUpdate::duplicate)
        .def_readonly("expired", &VerdictUpdate::expired);

    py::class_<ReceiverContext>(m, "ReceiverContext")
        .def(py::init<std::uint32_t, const ReceiverConfig&>(), py::arg("icao"),
             py::arg("config") = ReceiverConfig{})
        .def("ingest", &ReceiverContext::ingest, py::arg("frame"), py::arg("rx_interval"))
        .def("state", &ReceiverContext::state)
        .def("streams", &ReceiverContext::streams)
        .def("settled", &ReceiverContext::settled)
        .def("pending_count", &ReceiverContext::pending_count)
        .def("current_interval", &ReceiverContext::current_interval)
        .def_static(
            "check_integrity",
            [](const py::bytes& adsb, const BitVec& mac_bits, std::uint8_t seq,
               std::uint32_t interval, const py::bytes& interval_key) {
                return ReceiverContext::check_integrity(arr_from_bytes<14>(adsb, "adsb frame"),
                                                        mac_bits, seq, interval,
                                                        arr_from_bytes<16>(interval_key, "key"));
            },
            py::arg("adsb"), py::arg("mac_bits"), py::arg("seq"), py::arg("interval"),
            py::arg("interval_key"));

    m.def("rx_state_name", &rx_state_name);
    m.def("integrity_name", &integrity_name);
    m.def("stream_verdict_name", &stream_verdict_name);

    // ---- airspace ----
    py::class_<TrafficMessage>(m, "TrafficMessage")
        .def_readonly("t", &TrafficMessage::t)
        .def_readonly("icao", &TrafficMessage::icao);

    py::class_<TrafficCapture>(m, "TrafficCapture")
        .def_readonly("records", &TrafficCapture::records)
        .def_readonly("window_s", &TrafficCapture::window_s)
        .def_readonly("duration_s", &TrafficCapture::duration_s)
        .def("__len__", [](const TrafficCapture& c) { return c.records.size(); });

    py::class_<ScenarioParams>(m, "ScenarioParams")
        .def(py::init<>())
        .def(py::init([](double t_b1, double t_b2, double t_c) {
                 ScenarioParams s{t_b1, t_b2, t_c};
                 s.validate();
                 return s;
             }),
             py::arg("t_b1"), py::arg("t_b2"), py::arg("t_c"))
        .def_readwrite("t_b1", &ScenarioParams::t_b1)
        .def_readwrite("t_b2", &ScenarioParams::t_b2)
        .def_readwrite("t_c", &ScenarioParams::t_c)
        .def("validate", &ScenarioParams::validate);

    py::class_<CorResult>(m, "CorResult")
        .def_readonly("gamma_adsb", &CorResult::gamma_adsb)
        .def_readonly("gamma_cabba", &CorResult::gamma_cabba)
        .def_readonly("packet_overhead_frac", &CorResult::packet_overhead_frac)
        .def_readonly("n_a", &CorResult::n_a)
        .def_readonly("n_b1", &CorResult::n_b1)
        .def_readonly("n_b2", &CorResult::n_b2)
        .def_readonly("n_c", &CorResult::n_c);

    py::class_<CorWindow>(m, "CorWindow")
        .def_readonly("t0", &CorWindow::t0)
        .def_readonly("duration_s", &CorWindow::duration_s)
        .def_readonly("cor", &CorWindow::cor);

    py::class_<HourlyCor>(m, "HourlyCor")
        .def_readonly("hour", &HourlyCor::hour)
        .def_readonly("mean", &HourlyCor::mean)
        .def_readonly("lo", &HourlyCor::lo)
        .def_readonly("hi", &HourlyCor::hi);

    py::class_<EcdfPoint>(m, "EcdfPoint")
        .def(py::init([](double distance_km, double p) {
                 EcdfPoint e;
                 e.distance_km = distance_km;
                 e.p = p;
                 return e;
             }),
             py::arg("distance_km"), py::arg("p"))
        .def_readwrite("distance_km", &EcdfPoint::distance_km)
        .def_readwrite("p", &EcdfPoint::p);

    py::enum_<SafetyDomain>(m, "SafetyDomain")
        .value("tcas", SafetyDomain::tcas)
        .value("atc", SafetyDomain::atc);

    py::class_<SafetyRow>(m, "SafetyRow")
        .def_readonly("name", &SafetyRow::name)
        .def_readonly("radius_km", &SafetyRow::radius_km)
        .def_readonly("p", &SafetyRow::p)
        .def_readonly("delay_tb1_s", &SafetyRow::delay_tb1_s)
        .def_readonly("window_lo_s", &SafetyRow::window_lo_s)
        .def_readonly("window_hi_s", &SafetyRow::window_hi_s)
        .def_readonly("los_lo_min", &SafetyRow::los_lo_min)
        .def_readonly("los_hi_min", &SafetyRow::los_hi_min)
        .def_readonly("delay_tc_s", &SafetyRow::delay_tc_s);

    m.def("scenario_preset", &scenario_preset, py::arg("idx"));
    m.attr("NUM_SCENARIOS") = kNumScenarios;
    m.def("synth_capture", &synth_capture, py::arg("n_aircraft"), py::arg("msgs_per_s"),
          py::arg("duration_s"), py::arg("seed"));
    m.def(
        "ingest_capture_file",
        [](const std::string& path) { return ingest_capture_file(path); },
        py::arg("path"));
    m.def("cor_adsb", &cor_adsb, py::arg("capture"), py::arg("t0"), py::arg("window_s"));
    m.def("cor_cabba", &cor_cabba, py::arg("capture"), py::arg("t0"), py::arg("window_s"),
          py::arg("scenario"));
    m.def("cor_windows", &cor_windows, py::arg("capture"), py::arg("window_s"), py::arg("scenario"));
    m.def(
        "cor_hourly",
        [](const TrafficCapture& cap, std::optional<ScenarioParams> scn) {
            return cor_hourly(cap, scn ? &*scn : nullptr);
        },
        py::arg("capture"), py::arg("scenario") = std::nullopt);
    m.def("extra_airtime_us_per_aircraft", &extra_airtime_us_per_aircraft, py::arg("scenario"),
          py::arg("window_s"));
    m.def("sat_overhead_bits_per_min", &sat_overhead_bits_per_min, py::arg("f_a_hz"),
          py::arg("t_b_s"), py::arg("t_c_s"));
    m.attr("SAT_QUOTED_BITS_PER_MIN") = kSatQuotedBitsPerMin;
    m.attr("SAT_QUOTED_OVERHEAD_BPS") = kSatQuotedOverheadBps;
    m.attr("LEGACY_QUOTED_BPS") = kLegacyQuotedBps;
    m.def("expected_uncertainty_delay", &expected_uncertainty_delay, py::arg("p"),
          py::arg("t_interval_s"));
    m.def("los_range_nm", &los_range_nm, py::arg("altitude_ft"));
    m.def("mutual_los_range_nm", &mutual_los_range_nm, py::arg("alt1_ft"), py::arg("alt2_ft"));
    m.def("ecdf_interpolate", &ecdf_interpolate, py::arg("ecdf"), py::arg("distance_km"));
    m.def("safety_table", &safety_table, py::arg("domain"), py::arg("scenario"),
          py::arg("loss_ecdf"));
    m.def("read_ecdf_csv", &read_ecdf_csv, py::arg("path"));
}
