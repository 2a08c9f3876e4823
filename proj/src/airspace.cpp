#include "cabba/airspace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cabba/errors.hpp"
#include "cabba/rng.hpp"

namespace cabba {
namespace {

constexpr double kUsPerS = 1e6;
// 95% two-sided Student-t quantiles for small samples, df = n-1.
constexpr double kT95[] = {0.0,      12.706205, 4.302653, 3.182446, 2.776445,
                           2.570582, 2.446912,  2.364624, 2.306004, 2.262157,
                           2.228139};

std::pair<std::vector<TrafficMessage>::const_iterator,
          std::vector<TrafficMessage>::const_iterator>
span(const TrafficCapture& cap, double from, double to) {
    auto lo = std::lower_bound(cap.records.begin(), cap.records.end(), from,
                               [](const TrafficMessage& m, double t) { return m.t < t; });
    auto hi = std::lower_bound(cap.records.begin(), cap.records.end(), to,
                               [](const TrafficMessage& m, double t) { return m.t < t; });
    return {lo, hi};
}

std::uint64_t count_messages(const TrafficCapture& cap, double from, double to) {
    auto [lo, hi] = span(cap, from, to);
    return static_cast<std::uint64_t>(hi - lo);
}

// Aircraft seen during the trailing T seconds before `end`.
std::uint64_t distinct_icaos(const TrafficCapture& cap, double end, double t_back) {
    auto [lo, hi] = span(cap, std::max(0.0, end - t_back), end);
    std::unordered_set<std::uint32_t> icaos;
    for (auto it = lo; it != hi; ++it) icaos.insert(it->icao);
    return icaos.size();
}

double airtime_us(FrameType t) { return frame_airtime_us(t); }

}  // namespace

void ScenarioParams::validate() const {
    if (t_b1 <= 0.0 || t_b2 <= 0.0 || t_c <= 0.0)
        throw InvalidConfig("scenario periods must be positive");
    const double k = t_b2 / t_b1;
    if (std::abs(k - std::round(k)) > 1e-9 || k < 1.0 - 1e-9)
        throw InvalidConfig("t_b2 must be a positive multiple of t_b1");
}

ScenarioParams scenario_preset(int idx) {
    switch (idx) {
        case 1: return {5.0, 5.0, 5.0};
        case 2: return {5.0, 10.0, 15.0};
        case 3: return {5.0, 10.0, 20.0};
        case 4: return {5.0, 15.0, 30.0};
        default: throw InvalidConfig("scenario preset must be 1..4");
    }
}

TrafficCapture ingest_capture(std::istream& in, IngestStats* stats) {
    TrafficCapture cap;
    IngestStats local;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const std::size_t comma = line.find(',');
        bool ok = comma != std::string::npos;
        TrafficMessage m;
        if (ok) {
            try {
                std::size_t used = 0;
                m.t = std::stod(line.substr(0, comma), &used);
                ok = used == comma;
                std::size_t hex_used = 0;
                const std::string icao_s = line.substr(comma + 1);
                const unsigned long icao = std::stoul(icao_s, &hex_used, 16);
                ok = ok && hex_used == icao_s.size() && icao <= 0xFFFFFF && m.t >= 0.0;
                m.icao = static_cast<std::uint32_t>(icao);
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (ok)
            cap.records.push_back(m);
        else
            ++local.skipped;
    }
    if (cap.records.empty()) throw ZeroValidRows("capture has no valid rows");
    std::stable_sort(cap.records.begin(), cap.records.end(),
                     [](const TrafficMessage& a, const TrafficMessage& b) { return a.t < b.t; });
    cap.duration_s = cap.records.back().t;
    if (stats) *stats = local;
    return cap;
}

TrafficCapture ingest_capture_file(const std::string& path, IngestStats* stats) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open capture file: " + path);
    return ingest_capture(f, stats);
}

TrafficCapture synth_capture(int n_aircraft, double msgs_per_s, double duration_s,
                             std::uint64_t seed) {
    if (n_aircraft <= 0 || msgs_per_s <= 0.0 || duration_s <= 0.0)
        throw InvalidConfig("capture parameters must be positive");
    TrafficCapture cap;
    cap.duration_s = duration_s;
    Rng rng(seed);
    const double period = 1.0 / msgs_per_s;
    for (int a = 0; a < n_aircraft; ++a) {
        const std::uint32_t icao = 0x100000 + static_cast<std::uint32_t>(a);
        const double phase = rng.uniform01();
        for (std::uint64_t k = 0;; ++k) {
            const double t = (static_cast<double>(k) + phase) * period;
            if (t >= duration_s) break;
            cap.records.push_back({t, icao});
        }
    }
    std::sort(cap.records.begin(), cap.records.end(),
              [](const TrafficMessage& a, const TrafficMessage& b) { return a.t < b.t; });
    return cap;
}

double cor_adsb(const TrafficCapture& cap, double t0, double window_s) {
    if (window_s <= 0.0) throw InvalidConfig("window must be positive");
    const double n_a = static_cast<double>(count_messages(cap, t0, t0 + window_s));
    return n_a * airtime_us(FrameType::A) / kUsPerS / window_s;
}

double extra_airtime_us_per_aircraft(const ScenarioParams& scn, double window_s) {
    scn.validate();
    const double n_b1 = window_s * (1.0 / scn.t_b1 - 1.0 / scn.t_b2);
    const double n_b2 = window_s / scn.t_b2;
    const double n_c = window_s / scn.t_c;
    return n_b1 * airtime_us(FrameType::B1) + n_b2 * airtime_us(FrameType::B2) +
           n_c * airtime_us(FrameType::C);
}

CorResult cor_cabba(const TrafficCapture& cap, double t0, double window_s,
                    const ScenarioParams& scn) {
    if (window_s <= 0.0) throw InvalidConfig("window must be positive");
    scn.validate();
    const double end = t0 + window_s;
    CorResult r;
    r.n_a = static_cast<double>(count_messages(cap, t0, end));
    const double x_b1 = static_cast<double>(distinct_icaos(cap, end, scn.t_b1));
    const double x_b2 = static_cast<double>(distinct_icaos(cap, end, scn.t_b2));
    const double x_c = static_cast<double>(distinct_icaos(cap, end, scn.t_c));
    r.n_b2 = x_b2 * window_s / scn.t_b2;
    r.n_b1 = std::max(0.0, x_b1 * window_s / scn.t_b1 - r.n_b2);
    r.n_c = x_c * window_s / scn.t_c;
    r.gamma_adsb = r.n_a * airtime_us(FrameType::A) / kUsPerS / window_s;
    r.gamma_cabba = (r.n_a * airtime_us(FrameType::A) + r.n_b1 * airtime_us(FrameType::B1) +
                     r.n_b2 * airtime_us(FrameType::B2) + r.n_c * airtime_us(FrameType::C)) /
                    kUsPerS / window_s;
    const double overlay = r.n_b1 + r.n_b2 + r.n_c;
    const double total = r.n_a + overlay;
    r.packet_overhead_frac = total > 0.0 ? overlay / total : 0.0;
    return r;
}

std::vector<CorWindow> cor_windows(const TrafficCapture& cap, double window_s,
                                   const ScenarioParams& scn) {
    if (window_s <= 0.0) throw InvalidConfig("window must be positive");
    std::vector<CorWindow> out;
    for (double t0 = 0.0; t0 + window_s <= cap.duration_s + 1e-9; t0 += window_s) {
        CorWindow w;
        w.t0 = t0;
        w.duration_s = window_s;
        w.cor = cor_cabba(cap, t0, window_s, scn);
        out.push_back(w);
    }
    return out;
}

std::vector<HourlyCor> cor_hourly(const TrafficCapture& cap, const ScenarioParams* scn) {
    const int hours = static_cast<int>(cap.duration_s / 3600.0);
    std::vector<HourlyCor> out;
    for (int h = 0; h < hours; ++h) {
        double vals[kWindowsPerHour];
        for (int m = 0; m < kWindowsPerHour; ++m) {
            const double t0 = h * 3600.0 + m * 600.0;
            vals[m] = scn ? cor_cabba(cap, t0, kHourlyWindowS, *scn).gamma_cabba
                          : cor_adsb(cap, t0, kHourlyWindowS);
        }
        double mean = 0.0;
        for (double v : vals) mean += v;
        mean /= kWindowsPerHour;
        double var = 0.0;
        for (double v : vals) var += (v - mean) * (v - mean);
        var /= kWindowsPerHour - 1;
        const double half = kT95[kWindowsPerHour - 1] * std::sqrt(var / kWindowsPerHour);
        out.push_back({h, mean, mean - half, mean + half});
    }
    return out;
}

double sat_overhead_bits_per_min(double f_a_hz, double t_b_s, double t_c_s) {
    if (f_a_hz <= 0.0 || t_b_s <= 0.0 || t_c_s <= 0.0)
        throw InvalidConfig("rates and periods must be positive");
    return f_a_hz * 60.0 * 24.0 + (60.0 / t_b_s) * 184.0 + (60.0 / t_c_s) * 1520.0;
}

double expected_uncertainty_delay(double p, double t_interval_s) {
    if (p < 0.0 || p >= 1.0) throw InvalidConfig("loss probability must be in [0, 1)");
    if (t_interval_s <= 0.0) throw InvalidConfig("interval must be positive");
    return (t_interval_s / 2.0) * (1.0 + 2.0 * p + 4.0 * p * p);
}

double los_range_nm(double altitude_ft) {
    if (altitude_ft < 0.0) throw InvalidConfig("altitude must be non-negative");
    return 1.06 * std::sqrt(altitude_ft);
}

double mutual_los_range_nm(double alt1_ft, double alt2_ft) {
    return los_range_nm(alt1_ft) + los_range_nm(alt2_ft);
}

double ecdf_interpolate(const std::vector<EcdfPoint>& ecdf, double distance_km) {
    if (ecdf.empty()) throw InvalidConfig("ecdf is empty");
    for (std::size_t i = 1; i < ecdf.size(); ++i) {
        if (ecdf[i].distance_km <= ecdf[i - 1].distance_km)
            throw InvalidConfig("ecdf distances must increase strictly");
        if (ecdf[i].p < ecdf[i - 1].p)
            throw InvalidConfig("ecdf probabilities must be non-decreasing");
    }
    if (distance_km <= ecdf.front().distance_km) return ecdf.front().p;
    if (distance_km >= ecdf.back().distance_km) return ecdf.back().p;
    for (std::size_t i = 1; i < ecdf.size(); ++i) {
        if (distance_km > ecdf[i].distance_km) continue;
        const EcdfPoint& a = ecdf[i - 1];
        const EcdfPoint& b = ecdf[i];
        const double f = (distance_km - a.distance_km) / (b.distance_km - a.distance_km);
        return a.p + f * (b.p - a.p);
    }
    return ecdf.back().p;
}

std::vector<SafetyRow> safety_table(SafetyDomain domain, const ScenarioParams& scn,
                                    const std::vector<EcdfPoint>& loss_ecdf) {
    scn.validate();

    // Time inside LOS range: mutual LOS distance over the closure rate.
    auto los_minutes = [](double mutual_nm, double closure_kt) {
        return mutual_nm / closure_kt * 60.0;
    };

    struct RowSpec {
        const char* name;
        double radius_km;
        double window_lo_s, window_hi_s;
        double los_lo_min, los_hi_min;
    };

    std::vector<RowSpec> specs;
    if (domain == SafetyDomain::tcas) {
        // Advisory volumes; LOS columns span the terminal (both at
        // 3000 ft, 500 kt closure) and oceanic (both at cruise,
        // 1200 kt closure) situations.
        const double los_low = los_minutes(mutual_los_range_nm(3000, 3000), 500);
        const double los_high = los_minutes(mutual_los_range_nm(35000, 35000), 1200);
        specs.push_back({"TA", 29.6, 20, 48, los_low, los_high});
        specs.push_back({"RA", 21.5, 15, 35, los_low, los_high});
    } else {
        const double tower = los_minutes(los_range_nm(3000), 250);
        const double terminal = los_minutes(los_range_nm(12500), 250);
        const double acc = los_minutes(140.0, 450);  // class A floor-to-ceiling service range
        specs.push_back({"Tower", 9.3, 10, 10, tower, tower});
        specs.push_back({"Terminal", 74.1, 10, 10, terminal, terminal});
        specs.push_back({"ACC", 277.8, 10, 10, acc, acc});
    }

    std::vector<SafetyRow> rows;
    for (const RowSpec& s : specs) {
        SafetyRow r;
        r.name = s.name;
        r.radius_km = s.radius_km;
        r.p = ecdf_interpolate(loss_ecdf, s.radius_km);
        r.delay_tb1_s = expected_uncertainty_delay(r.p, scn.t_b1);
        r.delay_tc_s = expected_uncertainty_delay(r.p, scn.t_c);
        r.window_lo_s = s.window_lo_s;
        r.window_hi_s = s.window_hi_s;
        r.los_lo_min = s.los_lo_min;
        r.los_hi_min = s.los_hi_min;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace cabba
