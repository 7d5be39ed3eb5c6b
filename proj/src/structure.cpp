#include "dedekind/structure.hpp"

namespace dedekind {

BigInt modulus_cofactor(const Pair& p, const BigInt& q) {
    if (q < 2)
        throw precondition_error("modulus_cofactor: q must be >= 2");
    const BigInt num = q * (p.a() * p.a() + 1);
    if (num % p.b() != 0)
        throw precondition_error("modulus_cofactor: b does not divide q*(a^2+1); "
                                 "q is not the reduced denominator of S(a,b)");
    const BigInt t = num / p.b();
    if (gcd(t, q) != 1)
        throw precondition_error("modulus_cofactor: gcd(t, q) != 1; "
                                 "q is not the reduced denominator of S(a,b)");
    if ((p.a() * p.a() + 1) % t != 0)
        throw invariant_error("modulus_cofactor: t does not divide a^2+1");
    return t;
}

BigInt modulus_for(const BigInt& a, const BigInt& q, const BigInt& t) {
    if (q < 2)
        throw precondition_error("modulus_for: q must be >= 2");
    if (t < 1)
        throw precondition_error("modulus_for: t must be >= 1");
    if (gcd(t, q) != 1)
        throw precondition_error("modulus_for: gcd(t, q) != 1");
    const BigInt num = a * a + 1;
    if (num % t != 0)
        throw precondition_error("modulus_for: t does not divide a^2+1");
    return q * (num / t);
}

Rational three_term_rhs(const BigInt& a, const BigInt& q, const BigInt& t) {
    if (q < 2)
        throw precondition_error("three_term_rhs: q must be >= 2");
    if (t < 1)
        throw precondition_error("three_term_rhs: t must be >= 1");
    if (gcd(t, q) != 1)
        throw precondition_error("three_term_rhs: gcd(t, q) != 1");
    if (gcd(abs(a), q) != 1)
        throw precondition_error("three_term_rhs: gcd(a, q) != 1");
    if ((a * a + 1) % t != 0)
        throw precondition_error("three_term_rhs: t does not divide a^2+1");

    const BigInt t_inv = mod_inverse(t, q);
    // t | a^2+1 forces gcd(a,t) = 1, so both sums below are on coprime pairs.
    const Rational first = sum_fast(mod_floor(a * q, t), t);
    const Rational second = sum_fast(mod_floor(a * t_inv, q), q);
    return -first + second + Rational((q * q - 1) * a, t * q);
}

Rational closed_form_rhs(const BigInt& r, const BigInt& q, const BigInt& n,
                         const BigInt& s) {
    if (q < 2)
        throw precondition_error("closed_form_rhs: q must be >= 2");
    if (r < 1)
        throw precondition_error("closed_form_rhs: r must be >= 1");
    if (n < 1)
        throw precondition_error("closed_form_rhs: n must be >= 1");
    if ((r * r * q * q + 1) % n != 0)
        throw precondition_error("closed_form_rhs: n does not divide r^2*q^2+1");
    if (gcd(abs(s), q) != 1)
        throw precondition_error("closed_form_rhs: gcd(s, q) != 1");

    const Rational first = sum_fast(mod_floor(r * q * q, n), n);
    const Rational second = sum_fast(mod_floor(s, q), q);
    return first + second - Rational((q * q - 1) * r, n) + Rational(s * q) -
           Rational(s, q);
}

Decomposition decompose(const Pair& p) {
    const Rational value = sum_fast(p);
    if (value.den() == 1)
        throw precondition_error("decompose: S(a,b) = " + value.str() +
                                 " is an integer (denominator 1); only values "
                                 "with denominator >= 2 decompose");
    Decomposition d;
    d.k = value.num();
    d.q = value.den();
    d.t = modulus_cofactor(p, d.q);

    const BigInt t_inv = mod_inverse(d.t, d.q);
    d.s = mod_floor(p.a() * t_inv, d.q);
    if (d.s == 0)
        throw invariant_error("decompose: a*t_inv vanished mod q");
    if ((d.s * d.t - p.a()) % d.q != 0)
        throw invariant_error("decompose: q does not divide s*t - a");
    d.r = (d.s * d.t - p.a()) / d.q;
    while (d.r < 1) { // bump to the least representative with r >= 1
        d.s += d.q;
        d.r += d.t;
    }

    if ((d.r * d.r * d.q * d.q + 1) % d.t != 0)
        throw invariant_error("decompose: t does not divide r^2*q^2 + 1");
    d.n = (d.r * d.r * d.q * d.q + 1) / d.t;

    if (gcd(d.s, d.q) != 1 || gcd(d.t, d.q) != 1 || d.n < 1 ||
        d.n * d.t != d.r * d.r * d.q * d.q + 1 || d.seed_a() != p.a() ||
        d.seed_b() != p.b())
        throw invariant_error("decompose: decomposition invariants failed for (" +
                              to_string(p.a()) + ", " + to_string(p.b()) + ")");
    return d;
}

} // namespace dedekind
