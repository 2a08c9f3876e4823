#include "cabba/bits.hpp"

#include <stdexcept>

#include "cabba/errors.hpp"

namespace cabba {

namespace {

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitVec BitVec::from_bytes(const std::uint8_t* data, std::size_t nbits) {
    BitVec v;
    v.bits_.resize(nbits);
    for (std::size_t i = 0; i < nbits; ++i)
        v.bits_[i] = (data[i / 8] >> (7 - i % 8)) & 1;
    return v;
}

BitVec BitVec::from_bytes(const std::vector<std::uint8_t>& data, std::size_t nbits) {
    if (data.size() * 8 < nbits)
        throw AlignmentError("byte buffer shorter than requested bit count");
    return from_bytes(data.data(), nbits);
}

BitVec BitVec::from_hex(const std::string& hex, std::size_t nbits) {
    if (hex.size() % 2 != 0)
        throw AlignmentError("hex string has odd length");
    std::vector<std::uint8_t> bytes;
    bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw AlignmentError("non-hex character in input");
        bytes.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return from_bytes(bytes, nbits);
}

void BitVec::append(const BitVec& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void BitVec::append_uint(std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i)
        bits_.push_back(static_cast<std::uint8_t>((value >> i) & 1));
}

void BitVec::append_zeros(std::size_t n) {
    bits_.insert(bits_.end(), n, 0);
}

std::uint64_t BitVec::read_uint(std::size_t pos, int width) const {
    if (pos + width > bits_.size())
        throw IndexOutOfRange("read_uint past end of bit vector");
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i)
        v = v << 1 | bits_[pos + i];
    return v;
}

BitVec BitVec::slice(std::size_t pos, std::size_t len) const {
    if (pos + len > bits_.size())
        throw IndexOutOfRange("slice past end of bit vector");
    BitVec v;
    v.bits_.assign(bits_.begin() + pos, bits_.begin() + pos + len);
    return v;
}

std::vector<std::uint8_t> BitVec::to_bytes() const {
    std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    return out;
}

std::string BitVec::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::uint8_t b : to_bytes()) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

}  // namespace cabba
