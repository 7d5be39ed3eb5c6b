/**
 * @file search.hpp
 * @brief Enumerate all moduli of a target sum value up to a bound.
 *
 * Two independent routes: a brute-force scan over every coprime pair (the
 * oracle) and a divisor-driven enumeration that walks the divisors t of
 * a^2+1 with gcd(t,q) == 1 and tests only b = q(a^2+1)/t. Both return the
 * identical canonical set, sorted by (b, a).
 */
#ifndef DEDEKIND_SEARCH_HPP
#define DEDEKIND_SEARCH_HPP

#include <string>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/generator.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

struct ModulusHit {
    BigInt a; // 0 <= a < b
    BigInt b;
    Rational value;

    friend bool operator==(const ModulusHit& x, const ModulusHit& y) {
        return x.a == y.a && x.b == y.b && x.value == y.value;
    }
};

/// Every (a, b) with 0 <= a < b <= b_max, gcd(a,b) == 1 and S(a,b) equal to
/// the target, found by scanning all coprime pairs. Requires a non-integer
/// target (denominator >= 2) and b_max >= 1. threads == 0 means one worker
/// per hardware thread; the result is identical for any thread count.
std::vector<ModulusHit> enumerate_bruteforce(const Rational& target,
                                             const BigInt& b_max,
                                             unsigned threads = 0);

/// Same result set as enumerate_bruteforce, computed by divisor enumeration:
/// for each a, each divisor t of a^2+1 coprime to q proposes the single
/// candidate modulus b = q(a^2+1)/t, which is kept iff it lands in range,
/// is coprime to a, and the sum value matches.
std::vector<ModulusHit> enumerate_divisor(const Rational& target,
                                          const BigInt& b_max,
                                          unsigned threads = 0);

/// Plain-text comparison of modulus densities per decade of b: how many
/// enumerated moduli fall in [10^d, 10^(d+1)) versus how many sequence
/// terms do. Empty inputs produce an empty report.
std::string density_report(const std::vector<ModulusHit>& hits,
                           const std::vector<GeneratedTerm>& generated);

} // namespace dedekind

#endif // DEDEKIND_SEARCH_HPP
