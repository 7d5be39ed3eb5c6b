#include "dedekind/dedekind_sum.hpp"

#include <cstdint>

namespace dedekind {

namespace {

// Largest b for which the int64 inner loop of the definitional sum cannot
// overflow: every term (2k-b)(2m-b) is < b^2 in magnitude and there are
// fewer than b of them, so the accumulator stays below b^3 < 2^63.
constexpr std::int64_t kDefinitionalInt64Cap = 1'500'000;

Rational sum_definitional_int64(std::int64_t a0, std::int64_t b) {
    // S = 12 * sum_{k=1}^{b-1} (2k-b)/(2b) * (2m_k-b)/(2b)  with m_k = a*k mod b,
    // skipping terms where the sawtooth sits on an integer. Accumulate the
    // numerators over the common denominator (2b)^2 and reduce once.
    std::int64_t acc = 0;
    std::int64_t m = 0;
    for (std::int64_t k = 1; k < b; ++k) {
        m += a0;
        if (m >= b)
            m -= b;
        if (m != 0)
            acc += (2 * k - b) * (2 * m - b);
    }
    return Rational(BigInt(3) * acc, BigInt(b) * b);
}

} // namespace

namespace detail {

Rational sum_definitional_bigint(const BigInt& a, const BigInt& b) {
    const BigInt a0 = mod_floor(a, b);
    BigInt acc = 0;
    BigInt m = 0;
    for (BigInt k = 1; k < b; ++k) {
        m += a0;
        if (m >= b)
            m -= b;
        if (m != 0)
            acc += (2 * k - b) * (2 * m - b);
    }
    return Rational(3 * acc, b * b);
}

} // namespace detail

Pair::Pair(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
    if (b_ < 1)
        throw precondition_error("Pair: b must be >= 1");
    if (gcd(abs(a_), b_) != 1)
        throw precondition_error("Pair: gcd(a, b) != 1 for a = " + to_string(a_) +
                                 ", b = " + to_string(b_));
}

Rational sum_definitional(const Pair& p) {
    if (p.b() <= kDefinitionalInt64Cap) {
        const auto b = static_cast<std::int64_t>(p.b());
        const auto a0 = static_cast<std::int64_t>(mod_floor(p.a(), p.b()));
        return sum_definitional_int64(a0, b);
    }
    return detail::sum_definitional_bigint(p.a(), p.b());
}

namespace {

// Core recursion on 0 <= a < b, gcd(a,b) == 1:
//   S(a,b) = reciprocity_rhs(a,b) - S(b mod a, a),     S(0,1) = 0.
Rational sum_fast_reduced(BigInt a, BigInt b) {
    Rational total;
    bool negate = false;
    while (a != 0) {
        // a/b + b/a + 1/(ab) - 3 over the common denominator ab.
        Rational rhs(a * a + b * b + 1 - 3 * a * b, a * b);
        total += negate ? -rhs : rhs;
        BigInt next = b % a;
        b.swap(a);
        a = std::move(next);
        negate = !negate;
    }
    return total;
}

} // namespace

Rational sum_fast(const Pair& p) {
    if (p.b() == 1)
        return Rational();
    return sum_fast_reduced(mod_floor(p.a(), p.b()), p.b());
}

Rational sum_fast(const BigInt& a, const BigInt& b) {
    return sum_fast(Pair(a, b));
}

Rational reciprocity_rhs(const BigInt& a, const BigInt& b) {
    if (a < 1 || b < 1)
        throw precondition_error("reciprocity_rhs: arguments must be >= 1");
    if (gcd(a, b) != 1)
        throw precondition_error("reciprocity_rhs: gcd(a, b) != 1");
    return Rational(a * a + b * b + 1 - 3 * a * b, a * b);
}

Rational negate_arg(const Pair& p) {
    return -sum_fast(p);
}

bool inverse_arg_invariance_check(const BigInt& a, const BigInt& b) {
    if (b < 2)
        throw precondition_error("inverse_arg_invariance_check: b must be >= 2");
    const BigInt a_inv = mod_inverse(mod_floor(a, b), b);
    return sum_fast(a_inv, b) == sum_fast(a, b);
}

bool is_integer_value(const Pair& p) {
    return (p.a() * p.a() + 1) % p.b() == 0;
}

} // namespace dedekind
