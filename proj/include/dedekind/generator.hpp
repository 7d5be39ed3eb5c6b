/**
 * @file generator.hpp
 * @brief The value-preserving sequence machine.
 *
 * From a Decomposition (k,q,t,s,r,n) and an index r1 >= 0:
 *
 *   r2 = n*r1 + r          t2 = (r2^2*q^2 + 1)/n
 *   a2 = s*t2 - r2*q       b2 = q*(a2^2+1)/t2
 *   a3 = a2 + r1*t2*q      b3 = q*(a3^2+1)/t2
 *
 * Every (a3, b3) has the same sum value k/q as the seed, and b3 is an exact
 * quartic in r1 with leading coefficient n*q^5 (certified here by finite
 * differences, not assumed).
 */
#ifndef DEDEKIND_GENERATOR_HPP
#define DEDEKIND_GENERATOR_HPP

#include <optional>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/structure.hpp"

namespace dedekind {

struct GeneratedTerm {
    BigInt r1;
    BigInt r2;
    BigInt t2;
    BigInt a2;
    BigInt b2;
    BigInt a3;
    BigInt b3;
};

/// One term of the sequence. Checks every structural invariant, including
/// gcd(a3,b3) == 1, and throws invariant_error if any fails; r1 < 0 is a
/// precondition_error. r1 == 0 reproduces the seed pair exactly.
GeneratedTerm generate_term(const Decomposition& d, const BigInt& r1);

/// Whether S(a2,b2) == k/q - (q^2-1)*r1 for the term at r1. Returns nullopt
/// (skip) when gcd(a2,b2) != 1, where the sum is not defined.
std::optional<bool> shift_identity_check(const Decomposition& d, const BigInt& r1);

/// Terms for r1 = 0..r1_max inclusive.
std::vector<GeneratedTerm> generate_sequence(const Decomposition& d,
                                             const BigInt& r1_max);

struct QuarticCertificate {
    int degree;                // always 4
    BigInt leading_coefficient; // n*q^5
    BigInt fourth_difference;   // 24 * n*q^5, the constant 4th difference
};

/// Exact finite-difference certificate over b3(0), ..., b3(window): the 5th
/// forward differences all vanish and the 4th is constantly 24*n*q^5.
/// Requires window >= 5; throws invariant_error if the structure is violated
/// (which would falsify the degree-4 claim).
QuarticCertificate quartic_structure_check(const Decomposition& d,
                                           const BigInt& window);

} // namespace dedekind

#endif // DEDEKIND_GENERATOR_HPP
