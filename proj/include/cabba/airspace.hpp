#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cabba/frame.hpp"

namespace cabba {

// One legacy position/velocity message observation.
struct TrafficMessage {
    double t = 0.0;  // seconds from capture start
    std::uint32_t icao = 0;
};

struct TrafficCapture {
    std::vector<TrafficMessage> records;  // sorted by t, duplicates preserved
    double window_s = 30.0;               // default sampling window
    double duration_s = 0.0;
};

struct IngestStats {
    std::size_t skipped = 0;
};

// CSV rows "timestamp,icao24" (icao in hex). Malformed rows are counted
// and skipped; a capture with no valid rows is an error.
TrafficCapture ingest_capture(std::istream& in, IngestStats* stats = nullptr);
TrafficCapture ingest_capture_file(const std::string& path, IngestStats* stats = nullptr);

// Regular per-aircraft emissions at msgs_per_s with a random phase per
// aircraft; message count over the duration is exact, phases only shift
// epochs within a period.
TrafficCapture synth_capture(int n_aircraft, double msgs_per_s, double duration_s,
                             std::uint64_t seed);

// Broadcast periods for the overlay packet types. B2 occupies every
// k-th B1 slot, so t_b2 must be a positive integer multiple of t_b1.
struct ScenarioParams {
    double t_b1 = 5.0;
    double t_b2 = 15.0;
    double t_c = 30.0;
    void validate() const;
};

// Four reference settings, ordered safest to most bandwidth-efficient.
ScenarioParams scenario_preset(int idx);  // 1..4
constexpr int kNumScenarios = 4;

struct CorResult {
    double gamma_adsb = 0.0;
    double gamma_cabba = 0.0;
    double packet_overhead_frac = 0.0;  // overlay packets / all packets
    double n_a = 0.0;
    double n_b1 = 0.0;
    double n_b2 = 0.0;
    double n_c = 0.0;
};

// Channel-occupancy rate of the legacy traffic alone over [t0, t0+w).
double cor_adsb(const TrafficCapture& cap, double t0, double window_s);

// Occupancy with the overlay added. Overlay counts follow the
// estimation rule: every aircraft seen in the trailing T seconds before
// the window's end owes window/T packets of that type; B2 packets take
// over B1 slots at their own period.
CorResult cor_cabba(const TrafficCapture& cap, double t0, double window_s,
                    const ScenarioParams& scn);

struct CorWindow {
    double t0 = 0.0;
    double duration_s = 0.0;
    CorResult cor;
};

// Contiguous windows covering the capture.
std::vector<CorWindow> cor_windows(const TrafficCapture& cap, double window_s,
                                   const ScenarioParams& scn);

// Overlay airtime one continuously-visible aircraft adds per window
// (microseconds).
double extra_airtime_us_per_aircraft(const ScenarioParams& scn, double window_s);

struct HourlyCor {
    int hour = 0;
    double mean = 0.0;
    double lo = 0.0;   // 95% confidence bounds, Student-t over the windows
    double hi = 0.0;
};

// Six 30-second windows at the 10-minute marks of each complete hour.
// scenario == nullptr measures the legacy traffic alone.
std::vector<HourlyCor> cor_hourly(const TrafficCapture& cap, const ScenarioParams* scn);

constexpr double kHourlyWindowS = 30.0;
constexpr int kWindowsPerHour = 6;

// Per-aircraft per-minute broadcast overhead of the earlier TESLA
// adaptation this design is compared against (bits/minute).
double sat_overhead_bits_per_min(double f_a_hz, double t_b_s, double t_c_s);
constexpr double kSatQuotedBitsPerMin = 14752.0;
constexpr double kSatQuotedOverheadBps = 245.8;
constexpr double kLegacyQuotedBps = 694.4;

// Expected authentication delay when each key packet is lost
// independently with probability p and keys recur every t seconds.
double expected_uncertainty_delay(double p, double t_interval_s);

double los_range_nm(double altitude_ft);
double mutual_los_range_nm(double alt1_ft, double alt2_ft);

struct EcdfPoint {
    double distance_km = 0.0;
    double p = 0.0;
};

// Clamped linear interpolation; distances must increase strictly and p
// must be non-decreasing.
double ecdf_interpolate(const std::vector<EcdfPoint>& ecdf, double distance_km);

enum class SafetyDomain { tcas, atc };

struct SafetyRow {
    std::string name;
    double radius_km = 0.0;
    double p = 0.0;
    double delay_tb1_s = 0.0;
    double window_lo_s = 0.0;  // standard reaction time / surveillance update
    double window_hi_s = 0.0;
    double los_lo_min = 0.0;   // time spent inside LOS range
    double los_hi_min = 0.0;
    double delay_tc_s = 0.0;
};

std::vector<SafetyRow> safety_table(SafetyDomain domain, const ScenarioParams& scn,
                                    const std::vector<EcdfPoint>& loss_ecdf);

}  // namespace cabba
