#include "doctest.h"

#include <numeric>

#include "cabba/errors.hpp"
#include "cabba/rng.hpp"
#include "cabba/rs.hpp"

using namespace cabba;

namespace {

std::vector<std::uint8_t> pattern(int n, int mult, int add) {
    std::vector<std::uint8_t> v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>((mult * i + add) % 64);
    return v;
}

// Corrupt `count` distinct symbols of the codeword.
void corrupt(std::vector<std::uint8_t>& cw, int count, Rng& rng) {
    std::vector<std::size_t> pos(cw.size());
    std::iota(pos.begin(), pos.end(), 0);
    for (int i = 0; i < count; ++i) {
        std::size_t j = i + rng.bounded(pos.size() - i);
        std::swap(pos[i], pos[j]);
        std::uint8_t delta = static_cast<std::uint8_t>(1 + rng.bounded(63));
        cw[pos[i]] ^= delta;
    }
}

}  // namespace

TEST_SUITE("rs") {

TEST_CASE("generator polynomial matches reference") {
    // Roots alpha^1..alpha^20 over GF(64) with primitive poly x^6+x+1;
    // coefficients from an independent polynomial multiply.
    const std::vector<std::uint8_t> want = {1,  23, 44, 11, 33, 27, 8,  22, 37, 57, 36,
                                            15, 48, 22, 17, 38, 33, 31, 19, 23, 59};
    CHECK(rs::generator_poly(20) == want);
}

TEST_CASE("parity matches reference encoder") {
    const std::vector<std::uint8_t> p34 = {19, 37, 52, 21, 7,  37, 6,  63, 29, 60,
                                           23, 8,  61, 45, 51, 11, 44, 24, 62, 27};
    CHECK(rs::encode(pattern(34, 7, 3), 20) == p34);
    const std::vector<std::uint8_t> p16 = {51, 43, 0,  50, 4, 9,  18, 51, 29, 17,
                                           35, 17, 3,  50, 60, 32, 0,  12, 37, 20};
    CHECK(rs::encode(pattern(16, 5, 1), 20) == p16);
}

TEST_CASE("clean codewords decode with zero corrections") {
    for (auto [nd, np] : {std::pair{34, 20}, {16, 20}, {43, 9}, {43, 8}, {49, 11}, {49, 10}}) {
        std::vector<std::uint8_t> data = pattern(nd, 11, 2);
        std::vector<std::uint8_t> parity = rs::encode(data, np);
        std::vector<std::uint8_t> cw = data;
        cw.insert(cw.end(), parity.begin(), parity.end());
        rs::DecodeResult r = rs::decode(cw, np);
        CHECK(r.ok);
        CHECK(r.corrected == 0);
        CHECK(std::vector<std::uint8_t>(cw.begin(), cw.begin() + nd) == data);
    }
}

TEST_CASE("corrects up to half the parity budget") {
    Rng rng(1234);
    for (auto [nd, np] : {std::pair{34, 20}, {16, 20}, {43, 9}, {43, 8}, {49, 11}, {49, 10}}) {
        const int t = np / 2;
        for (int e = 1; e <= t; ++e) {
            std::vector<std::uint8_t> data = pattern(nd, 13, e);
            std::vector<std::uint8_t> parity = rs::encode(data, np);
            std::vector<std::uint8_t> cw = data;
            cw.insert(cw.end(), parity.begin(), parity.end());
            corrupt(cw, e, rng);
            rs::DecodeResult r = rs::decode(cw, np);
            CHECK(r.ok);
            CHECK(r.corrected == e);
            CHECK(std::vector<std::uint8_t>(cw.begin(), cw.begin() + nd) == data);
        }
    }
}

TEST_CASE("overloaded codewords are flagged, not silently wrong") {
    // Beyond t errors the decoder either reports failure or lands on a
    // different valid codeword; it must never return the original data
    // while claiming fewer corrections than were injected.
    Rng rng(99);
    int failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> data = pattern(34, 7, trial % 11);
        std::vector<std::uint8_t> parity = rs::encode(data, 20);
        std::vector<std::uint8_t> cw = data;
        cw.insert(cw.end(), parity.begin(), parity.end());
        corrupt(cw, 14, rng);
        rs::DecodeResult r = rs::decode(cw, 20);
        if (!r.ok) ++failures;
        if (r.ok)
            CHECK(std::vector<std::uint8_t>(cw.begin(), cw.begin() + 34) != data);
    }
    CHECK(failures >= 45);  // overwhelming majority must report failure
}

TEST_CASE("rejects symbols outside the field") {
    std::vector<std::uint8_t> data = pattern(10, 3, 1);
    data[4] = 64;
    CHECK_THROWS_AS(rs::encode(data, 8), InvalidConfig);
    std::vector<std::uint8_t> cw(20, 64);
    CHECK_THROWS_AS(rs::decode(cw, 8), InvalidConfig);
}

TEST_CASE("codeword length is capped by the field") {
    std::vector<std::uint8_t> data(60, 1);
    CHECK_THROWS_AS(rs::encode(data, 10), InvalidConfig);  // 70 symbols > 63
}

}
