/**
 * @file dedekind_sum.hpp
 * @brief Normalized Dedekind sums S(a,b) = 12*s(a,b), computed exactly.
 *
 * Two independent evaluators are provided on purpose:
 *   - sum_definitional: the Theta(b) sawtooth sum straight from the
 *     definition; slow, but trivially correct. This is the test oracle.
 *   - sum_fast: O(log b) arithmetic steps via the reciprocity law and
 *     periodicity; this is what everything else calls.
 */
#ifndef DEDEKIND_DEDEKIND_SUM_HPP
#define DEDEKIND_DEDEKIND_SUM_HPP

#include "dedekind/bigint.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// A coprime pair (a, b) with b >= 1: the domain of S. Construction
/// validates the invariants and throws precondition_error on violation.
class Pair {
public:
    Pair(BigInt a, BigInt b);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

private:
    BigInt a_;
    BigInt b_;
};

/// S(a,b) by the definition: 12 * sum_{k=1..b} ((k/b))((ak/b)), where
/// ((x)) is the sawtooth (x - floor(x) - 1/2 away from integers, 0 at
/// integers). Exact, Theta(b); intended for small b.
Rational sum_definitional(const Pair& p);

/// S(a,b) in O(log b) arithmetic steps: reduce a mod b, then alternate
/// reciprocity and periodicity down the Euclidean remainder chain,
/// accumulating the boundary terms exactly. Agrees with sum_definitional
/// on every valid input.
Rational sum_fast(const Pair& p);
Rational sum_fast(const BigInt& a, const BigInt& b);

/// Right-hand side of the reciprocity law for coprime a, b >= 1:
/// a/b + b/a + 1/(ab) - 3, so that S(a,b) + S(b,a) == reciprocity_rhs(a,b).
Rational reciprocity_rhs(const BigInt& a, const BigInt& b);

/// S(-a, b), via oddness in the first argument.
Rational negate_arg(const Pair& p);

/// Checks S(a*, b) == S(a, b) for a*a* == 1 (mod b); holds for every valid
/// input (inverse-argument invariance). Requires b >= 2, gcd(a,b) == 1.
bool inverse_arg_invariance_check(const BigInt& a, const BigInt& b);

/// Whether S(a,b) is an integer, decided arithmetically: true iff
/// b divides a^2 + 1 (and then the value is 0).
bool is_integer_value(const Pair& p);

namespace detail {
/// BigInt-only path of the definitional sum; sum_definitional dispatches
/// to an int64 inner loop when b is small enough for exact arithmetic.
Rational sum_definitional_bigint(const BigInt& a, const BigInt& b);
} // namespace detail

} // namespace dedekind

#endif // DEDEKIND_DEDEKIND_SUM_HPP
