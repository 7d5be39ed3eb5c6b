/**
 * @file bigint.hpp
 * @brief Arbitrary-precision signed integers and modular arithmetic helpers.
 *
 * Everything downstream (sums, decompositions, generated sequences) works on
 * BigInt: the quantities involved overflow fixed-width integers almost
 * immediately (b3 grows like n*q^5*r1^4).
 */
#ifndef DEDEKIND_BIGINT_HPP
#define DEDEKIND_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "dedekind/errors.hpp"

namespace dedekind {

using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Strict decimal parser: optional sign followed by digits, nothing else.
/// Throws precondition_error on malformed input.
BigInt parse_bigint(const std::string& text);

/// Decimal rendering; parse_bigint(to_string(n)) == n for every n.
std::string to_string(const BigInt& n);

/// Least non-negative residue of x mod m, for m >= 1. Unlike operator%,
/// the result is in [0, m) for negative x as well.
BigInt mod_floor(const BigInt& x, const BigInt& m);

/// Modular inverse via the extended Euclidean algorithm: the unique x with
/// 0 < x < m and a*x == 1 (mod m). Requires m >= 2 and gcd(a, m) == 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

} // namespace dedekind

#endif // DEDEKIND_BIGINT_HPP
