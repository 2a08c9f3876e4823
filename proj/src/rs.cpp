#include "cabba/rs.hpp"

#include <array>

#include "cabba/errors.hpp"

namespace cabba {
namespace rs {

namespace {

constexpr int kPrimPoly = 0x43;  // x^6 + x + 1

struct Tables {
    std::array<std::uint8_t, 126> exp;
    std::array<std::uint8_t, 64> log;
    Tables() {
        int x = 1;
        for (int i = 0; i < 63; ++i) {
            exp[i] = static_cast<std::uint8_t>(x);
            log[x] = static_cast<std::uint8_t>(i);
            x <<= 1;
            if (x & 0x40) x ^= kPrimPoly;
        }
        for (int i = 63; i < 126; ++i) exp[i] = exp[i - 63];
        log[0] = 0;  // never consulted
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

inline std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    const Tables& t = tables();
    return t.exp[t.log[a] + t.log[b]];
}

inline std::uint8_t gdiv(std::uint8_t a, std::uint8_t b) {
    const Tables& t = tables();
    return t.exp[(t.log[a] + 63 - t.log[b]) % 63];
}

inline std::uint8_t gpow(int e) {
    return tables().exp[((e % 63) + 63) % 63];
}

std::uint8_t poly_eval(const std::vector<std::uint8_t>& p, std::uint8_t x) {
    // p given lowest degree first
    std::uint8_t y = 0;
    for (std::size_t i = p.size(); i-- > 0;) y = static_cast<std::uint8_t>(gmul(y, x) ^ p[i]);
    return y;
}

}  // namespace

std::vector<std::uint8_t> generator_poly(int nparity) {
    std::vector<std::uint8_t> g{1};
    for (int i = 1; i <= nparity; ++i) {
        std::vector<std::uint8_t> next(g.size() + 1, 0);
        std::uint8_t root = gpow(i);
        for (std::size_t j = 0; j < g.size(); ++j) {
            next[j] ^= g[j];
            next[j + 1] ^= gmul(g[j], root);
        }
        g = std::move(next);
    }
    return g;
}

std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& data, int nparity) {
    if (nparity <= 0 || nparity >= kMaxCodeword)
        throw InvalidConfig("RS parity count out of range");
    if (static_cast<int>(data.size()) + nparity > kMaxCodeword)
        throw InvalidConfig("RS codeword longer than 63 symbols");
    for (std::uint8_t s : data)
        if (s >= kFieldSize) throw InvalidConfig("RS symbol out of GF(64)");

    std::vector<std::uint8_t> g = generator_poly(nparity);
    std::vector<std::uint8_t> rem(nparity, 0);
    for (std::uint8_t d : data) {
        std::uint8_t coef = d ^ rem[0];
        rem.erase(rem.begin());
        rem.push_back(0);
        if (coef)
            for (int j = 0; j < nparity; ++j)
                rem[j] = static_cast<std::uint8_t>(rem[j] ^ gmul(coef, g[j + 1]));
    }
    return rem;
}

DecodeResult decode(std::vector<std::uint8_t>& codeword, int nparity) {
    const int n = static_cast<int>(codeword.size());
    if (nparity <= 0 || n <= nparity || n > kMaxCodeword)
        throw InvalidConfig("RS codeword shape invalid");
    for (std::uint8_t s : codeword)
        if (s >= kFieldSize) throw InvalidConfig("RS symbol out of GF(64)");

    // syndromes S_i = C(alpha^i), i = 1..nparity; evaluate with the
    // codeword treated as a degree-(n-1) polynomial, highest first
    std::vector<std::uint8_t> synd(nparity, 0);
    bool all_zero = true;
    for (int i = 1; i <= nparity; ++i) {
        std::uint8_t x = gpow(i);
        std::uint8_t y = 0;
        for (int j = 0; j < n; ++j) y = static_cast<std::uint8_t>(gmul(y, x) ^ codeword[j]);
        synd[i - 1] = y;
        if (y) all_zero = false;
    }
    if (all_zero) return {true, 0};

    // Berlekamp-Massey: error locator sigma(x), lowest degree first
    std::vector<std::uint8_t> sigma{1}, prev{1};
    int L = 0, m = 1;
    std::uint8_t b = 1;
    for (int i = 0; i < nparity; ++i) {
        std::uint8_t delta = synd[i];
        for (int j = 1; j <= L; ++j)
            if (j < static_cast<int>(sigma.size()))
                delta = static_cast<std::uint8_t>(delta ^ gmul(sigma[j], synd[i - j]));
        if (delta == 0) {
            ++m;
        } else if (2 * L <= i) {
            std::vector<std::uint8_t> tmp = sigma;
            std::uint8_t scale = gdiv(delta, b);
            if (sigma.size() < prev.size() + m) sigma.resize(prev.size() + m, 0);
            for (std::size_t j = 0; j < prev.size(); ++j)
                sigma[j + m] = static_cast<std::uint8_t>(sigma[j + m] ^ gmul(scale, prev[j]));
            prev = std::move(tmp);
            L = i + 1 - L;
            b = delta;
            m = 1;
        } else {
            std::uint8_t scale = gdiv(delta, b);
            if (sigma.size() < prev.size() + m) sigma.resize(prev.size() + m, 0);
            for (std::size_t j = 0; j < prev.size(); ++j)
                sigma[j + m] = static_cast<std::uint8_t>(sigma[j + m] ^ gmul(scale, prev[j]));
            ++m;
        }
    }
    if (2 * L > nparity) return {false, 0};

    // Chien search over the shortened positions. Position j (0-based from
    // the left) corresponds to locator X = alpha^(n-1-j); roots of sigma
    // are X^-1.
    std::vector<int> error_pos;
    for (int j = 0; j < n; ++j) {
        std::uint8_t xinv = gpow(-(n - 1 - j));
        if (poly_eval(sigma, xinv) == 0) error_pos.push_back(j);
    }
    if (static_cast<int>(error_pos.size()) != L) return {false, 0};

    // Forney: omega(x) = [S(x) * sigma(x)] mod x^nparity
    std::vector<std::uint8_t> omega(nparity, 0);
    for (int i = 0; i < nparity; ++i) {
        std::uint8_t acc = 0;
        for (int j = 0; j <= i; ++j)
            if (j < static_cast<int>(sigma.size()))
                acc = static_cast<std::uint8_t>(acc ^ gmul(sigma[j], synd[i - j]));
        omega[i] = acc;
    }
    // sigma'(x): formal derivative (odd-degree terms)
    std::vector<std::uint8_t> dsigma;
    for (std::size_t i = 1; i < sigma.size(); i += 2) {
        dsigma.resize(i, 0);
        dsigma[i - 1] = sigma[i];
    }
    if (dsigma.empty()) return {false, 0};

    for (int j : error_pos) {
        std::uint8_t xinv = gpow(-(n - 1 - j));
        std::uint8_t num = poly_eval(omega, xinv);
        std::uint8_t den = poly_eval(dsigma, xinv);
        if (den == 0) return {false, 0};
        // magnitude = omega(X^-1) / sigma'(X^-1); no X factor since the
        // generator roots start at alpha^1
        std::uint8_t mag = gdiv(num, den);
        codeword[j] = static_cast<std::uint8_t>(codeword[j] ^ mag);
    }

    // re-check syndromes; miscorrections beyond t must not pass silently
    for (int i = 1; i <= nparity; ++i) {
        std::uint8_t x = gpow(i);
        std::uint8_t y = 0;
        for (int j = 0; j < n; ++j) y = static_cast<std::uint8_t>(gmul(y, x) ^ codeword[j]);
        if (y) return {false, 0};
    }
    return {true, L};
}

}  // namespace rs
}  // namespace cabba
