/**
 * @file cfrac.hpp
 * @brief Periodic continued fractions: convergents and sum-value filtering.
 *
 * Only the enumerate-and-filter direction lives here; the expansion itself
 * is supplied by the caller (text syntax "h0,h1,...;p1,p2,...").
 */
#ifndef DEDEKIND_CFRAC_HPP
#define DEDEKIND_CFRAC_HPP

#include <string>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// Partial quotients: head once, then period repeated forever. The leading
/// quotient may be arbitrary (e.g. 0); every later one must be >= 1, and the
/// period must be nonempty.
struct PeriodicCF {
    std::vector<BigInt> head;
    std::vector<BigInt> period;
};

/// Convergent of a given order; order 0 is the first partial quotient
/// (so order 0 of "0;3,2,1" is 0/1 and order 2 is 2/7).
struct Convergent {
    int order;
    BigInt num;
    BigInt den;
};

/// Parse "h0,h1,...;p1,p2,..." (head before ';', period after). Throws
/// precondition_error on malformed text or an invalid expansion.
PeriodicCF parse_periodic_cf(const std::string& text);

/// Convergents of order 0..max_order via the classical three-term
/// recurrence p_i = a_i*p_{i-1} + p_{i-2}, q_i = a_i*q_{i-1} + q_{i-2}.
/// Consecutive convergents satisfy p_i*q_{i-1} - p_{i-1}*q_i = +-1, so each
/// is in lowest terms (asserted).
std::vector<Convergent> convergents(const PeriodicCF& cf, int max_order);

/// Keep the convergents whose sum value S(num mod den, den) equals the
/// target k/q.
std::vector<Convergent> filter_by_value(const std::vector<Convergent>& convs,
                                        const Rational& target);

} // namespace dedekind

#endif // DEDEKIND_CFRAC_HPP
