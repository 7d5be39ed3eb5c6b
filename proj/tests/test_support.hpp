// Shared helpers for the test suites: a deterministic RNG (fixed seed, so
// every run sees the same cases) and generators for the structured random
// inputs the property tests need.
#ifndef DEDEKIND_TEST_SUPPORT_HPP
#define DEDEKIND_TEST_SUPPORT_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/dedekind_sum.hpp"

namespace dedekind::test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(0x5eed2024);
    return engine;
}

inline std::int64_t rand_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// Uniform-ish BigInt with the given number of decimal digits.
inline BigInt rand_bigint_digits(int digits) {
    std::string s;
    s.push_back(static_cast<char>('1' + rand_int(0, 8)));
    for (int i = 1; i < digits; ++i)
        s.push_back(static_cast<char>('0' + rand_int(0, 9)));
    return parse_bigint(s);
}

/// Random coprime pair with 1 <= b <= b_max and a in [a_lo, a_hi].
inline Pair rand_coprime_pair(std::int64_t b_max, std::int64_t a_lo,
                              std::int64_t a_hi) {
    for (;;) {
        const BigInt b = rand_int(1, b_max);
        const BigInt a = rand_int(a_lo, a_hi);
        if (gcd(abs(a), b) == 1)
            return Pair(a, b);
    }
}

/// All positive divisors of m (trial division; test-scale m only).
inline std::vector<std::int64_t> divisors(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0)
            continue;
        out.push_back(d);
        if (d != m / d)
            out.push_back(m / d);
    }
    return out;
}

struct StructuredTuple {
    BigInt a, q, t;
};

/// Random (a, q, t) with q >= 2, gcd(a,q) == 1, t | a^2+1, gcd(t,q) == 1.
/// These are exactly the tuples for which b = q(a^2+1)/t is a modulus with
/// sum denominator q and gcd(a,b) == 1.
inline StructuredTuple rand_structured_tuple(std::int64_t q_max = 60,
                                             std::int64_t a_abs_max = 3000) {
    for (;;) {
        const std::int64_t q = rand_int(2, q_max);
        std::int64_t a = rand_int(-a_abs_max, a_abs_max);
        if (std::gcd(a < 0 ? -a : a, q) != 1)
            continue;
        std::vector<std::int64_t> ts;
        for (std::int64_t t : divisors(a * a + 1))
            if (std::gcd(t, q) == 1)
                ts.push_back(t);
        if (ts.empty())
            continue;
        const std::int64_t t = ts[static_cast<std::size_t>(
            rand_int(0, static_cast<std::int64_t>(ts.size()) - 1))];
        return StructuredTuple{BigInt(a), BigInt(q), BigInt(t)};
    }
}

} // namespace dedekind::test

#endif // DEDEKIND_TEST_SUPPORT_HPP
