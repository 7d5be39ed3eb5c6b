/**
 * @file structure.hpp
 * @brief Structure of the moduli of a sum value k/q, and seed decomposition.
 *
 * For q >= 2, S(a,b) = k/q in lowest terms exactly when b = q(a^2+1)/t for
 * a natural t coprime to q. The decomposition extracts from a seed pair the
 * tuple (k,q,t,s,r,n) with a = s*t - r*q and n*t = r^2*q^2 + 1, which is all
 * the data the sequence generator needs.
 */
#ifndef DEDEKIND_STRUCTURE_HPP
#define DEDEKIND_STRUCTURE_HPP

#include "dedekind/bigint.hpp"
#include "dedekind/dedekind_sum.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

struct Decomposition {
    BigInt k;
    BigInt q; // >= 2, gcd(k,q) == 1
    BigInt t; // >= 1, gcd(t,q) == 1, t | a^2+1
    BigInt s; // gcd(s,q) == 1
    BigInt r; // >= 1
    BigInt n; // n*t == r^2*q^2 + 1

    /// The seed pair reconstructed from the tuple: a = s*t - r*q.
    BigInt seed_a() const { return s * t - r * q; }
    BigInt seed_b() const {
        const BigInt a = seed_a();
        return q * (a * a + 1) / t;
    }
};

/// The cofactor t with b * t == q * (a^2+1), given that S(a,b) has reduced
/// denominator q >= 2. Guarantees t >= 1, gcd(t,q) == 1, t | a^2+1; throws
/// precondition_error when the division or coprimality fails (wrong q).
BigInt modulus_cofactor(const Pair& p, const BigInt& q);

/// The modulus b = q * (a^2+1) / t for q >= 2, t >= 1 with gcd(t,q) == 1
/// and t | a^2+1. If additionally gcd(a,b) == 1, the reduced denominator
/// of S(a,b) is exactly q.
BigInt modulus_for(const BigInt& a, const BigInt& q, const BigInt& t);

/// Three-term identity: S(a,b) rewritten as
///   -S(aq, t) + S(a*t_inv, q) + (q^2-1)*a/(t*q),   t*t_inv == 1 (mod q),
/// evaluated with arguments reduced to least residues. Requires q >= 2,
/// gcd(t,q) == 1, gcd(a,q) == 1, t | a^2+1.
Rational three_term_rhs(const BigInt& a, const BigInt& q, const BigInt& t);

/// Closed form of S(a,b) for a = s*t - r*q, b = q(a^2+1)/t, t = (r^2q^2+1)/n:
///   S(rq^2, n) + S(s, q) - (q^2-1)*r/n + s*q - s/q.
/// Requires q >= 2, r >= 1, n >= 1 with n | r^2q^2+1, gcd(s,q) == 1.
Rational closed_form_rhs(const BigInt& r, const BigInt& q, const BigInt& n,
                         const BigInt& s);

/// Extract (k,q,t,s,r,n) from a seed pair with S(p) = k/q, q >= 2.
/// Canonical representative: s is the least positive residue of a*t_inv
/// mod q, bumped by q until r = (s*t - a)/q >= 1. Throws precondition_error
/// when the value is an integer (q == 1), invariant_error if any structural
/// invariant fails afterwards.
Decomposition decompose(const Pair& p);

} // namespace dedekind

#endif // DEDEKIND_STRUCTURE_HPP
