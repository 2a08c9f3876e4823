#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cabba/airspace.hpp"
#include "cabba/frame.hpp"
#include "cabba/modem.hpp"
#include "cabba/tesla.hpp"

namespace cabba {

// Shortest float form with six significant digits.
std::string fmt6(double v);

// One frame per line: "<type> I:<hex> Q:<hex>". Hex is MSB-first with
// zero fill in the trailing partial byte; bit counts are implied by the
// frame type.
std::string frame_line(FrameType type, const FramePackets& pkt);

enum class LineParse { ok, empty, bad_type, bad_hex, truncated };

struct ParsedFrameLine {
    LineParse status = LineParse::empty;
    FrameType type = FrameType::A;
    FramePackets pkt;
};

ParsedFrameLine parse_frame_line(const std::string& line);

// Interleaved float32 I/Q samples; a "<path>.meta" sidecar holds the
// sample rate as "#sr=<hz>".
bool write_iq(const std::string& path, const BasebandSignal& sig);
std::optional<BasebandSignal> read_iq(const std::string& path);

// One lowercase hex key per line, newest first (K_N down to K_0).
bool write_keychain(const std::string& path, const KeyChain& chain);
std::optional<std::vector<Key128>> read_keychain(const std::string& path);

// CSV "distance_km,p".
std::optional<std::vector<EcdfPoint>> read_ecdf_csv(const std::string& path);

}  // namespace cabba
