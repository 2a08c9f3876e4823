#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cabba {

// splitmix64; used to derive independent stream seeds from (master, a, b).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = master;
    std::uint64_t x = splitmix64(s);
    s ^= a * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL;
    std::uint64_t y = splitmix64(s);
    s ^= b * 0xd1342543de82ef95ULL + 0xde82ef95ULL;
    std::uint64_t z = splitmix64(s);
    return x ^ (y << 1) ^ (z >> 1);
}

// mt19937_64 with hand-rolled distributions. The standard distribution
// objects are implementation-defined, which would break byte-identical
// output across toolchains; these mappings are fixed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    int bit() { return static_cast<int>(eng_() >> 63); }

    // [0, 1) with 53-bit resolution
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // standard normal via Box-Muller, one cached value
    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log1p(-u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // uniform in [0, n) by rejection; portable
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace cabba
