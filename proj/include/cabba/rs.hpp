#pragma once

#include <cstdint>
#include <vector>

namespace cabba {

// Reed-Solomon over GF(64), primitive polynomial x^6 + x + 1, roots
// alpha^1..alpha^nparity, systematic. Codewords are sequences of 6-bit
// symbols (values 0..63), natural length 63, shortened freely below that.
// The quadrature reference layout is RS(54,34): 34 data + 20 parity
// symbols, correcting up to 10 symbol errors.
namespace rs {

constexpr int kSymbolBits = 6;
constexpr int kFieldSize = 64;
constexpr int kMaxCodeword = 63;

// Generator polynomial for roots alpha^1..alpha^nparity, highest degree
// first, g[0] = 1.
std::vector<std::uint8_t> generator_poly(int nparity);

// Appends `nparity` parity symbols to `data` (returned separately).
std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& data, int nparity);

struct DecodeResult {
    bool ok = false;       // false: uncorrectable
    int corrected = 0;     // symbol errors corrected
};

// Corrects `codeword` (data || parity) in place.
DecodeResult decode(std::vector<std::uint8_t>& codeword, int nparity);

}  // namespace rs
}  // namespace cabba
