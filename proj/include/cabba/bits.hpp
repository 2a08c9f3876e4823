#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cabba {

// Bit vector with MSB-first byte conversion. One byte per bit internally;
// frames here are a few hundred bits, clarity beats packing.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : bits_(nbits, 0) {}

    static BitVec from_bytes(const std::uint8_t* data, std::size_t nbits);
    static BitVec from_bytes(const std::vector<std::uint8_t>& data, std::size_t nbits);
    // Parses hex into bytes, then keeps the first nbits. Throws on non-hex
    // characters or when the hex string is too short.
    static BitVec from_hex(const std::string& hex, std::size_t nbits);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, int bit) { bits_[i] = bit ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }

    void push_back(int bit) { bits_.push_back(bit ? 1 : 0); }
    void append(const BitVec& other);
    // Appends `width` bits of `value`, most significant first.
    void append_uint(std::uint64_t value, int width);
    void append_zeros(std::size_t n);

    // Reads `width` bits starting at `pos`, MSB first.
    std::uint64_t read_uint(std::size_t pos, int width) const;
    BitVec slice(std::size_t pos, std::size_t len) const;

    // MSB-first packing; final byte zero-padded on the right.
    std::vector<std::uint8_t> to_bytes() const;
    std::string to_hex() const;

    bool operator==(const BitVec&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace cabba
