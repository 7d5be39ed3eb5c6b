#include "dedekind/generator.hpp"

#include "dedekind/dedekind_sum.hpp"

namespace dedekind {

GeneratedTerm generate_term(const Decomposition& d, const BigInt& r1) {
    if (r1 < 0)
        throw precondition_error("generate_term: r1 must be >= 0");

    GeneratedTerm g;
    g.r1 = r1;
    g.r2 = d.n * r1 + d.r;

    const BigInt r2q_sq = g.r2 * g.r2 * d.q * d.q + 1;
    if (r2q_sq % d.n != 0)
        throw invariant_error("generate_term: n does not divide r2^2*q^2 + 1");
    g.t2 = r2q_sq / d.n;
    if (g.t2 < 1 || gcd(g.t2, d.q) != 1)
        throw invariant_error("generate_term: t2 invariants failed");

    g.a2 = d.s * g.t2 - g.r2 * d.q;
    const BigInt a2_sq = g.a2 * g.a2 + 1;
    if (a2_sq % g.t2 != 0)
        throw invariant_error("generate_term: t2 does not divide a2^2 + 1");
    g.b2 = d.q * (a2_sq / g.t2);

    g.a3 = g.a2 + r1 * g.t2 * d.q;
    const BigInt a3_sq = g.a3 * g.a3 + 1;
    if (a3_sq % g.t2 != 0)
        throw invariant_error("generate_term: t2 does not divide a3^2 + 1");
    g.b3 = d.q * (a3_sq / g.t2);

    if (gcd(abs(g.a3), g.b3) != 1)
        throw invariant_error("generate_term: gcd(a3, b3) != 1 at r1 = " +
                              to_string(r1));
    return g;
}

std::optional<bool> shift_identity_check(const Decomposition& d, const BigInt& r1) {
    const GeneratedTerm g = generate_term(d, r1);
    if (gcd(abs(g.a2), g.b2) != 1)
        return std::nullopt; // S(a2,b2) undefined, nothing to check
    const Rational expected = Rational(d.k, d.q) - Rational((d.q * d.q - 1) * r1);
    return sum_fast(g.a2, g.b2) == expected;
}

std::vector<GeneratedTerm> generate_sequence(const Decomposition& d,
                                             const BigInt& r1_max) {
    if (r1_max < 0)
        throw precondition_error("generate_sequence: r1_max must be >= 0");
    std::vector<GeneratedTerm> terms;
    for (BigInt r1 = 0; r1 <= r1_max; ++r1)
        terms.push_back(generate_term(d, r1));
    return terms;
}

QuarticCertificate quartic_structure_check(const Decomposition& d,
                                           const BigInt& window) {
    if (window < 5)
        throw precondition_error("quartic_structure_check: window must be >= 5");

    std::vector<BigInt> diffs;
    for (const GeneratedTerm& g : generate_sequence(d, window))
        diffs.push_back(g.b3);

    const BigInt leading = d.n * d.q * d.q * d.q * d.q * d.q;
    const BigInt expected_fourth = 24 * leading;

    // Four rounds of forward differencing; then diffs holds the 4th differences.
    for (int order = 1; order <= 4; ++order) {
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
            diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
    }
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i] != expected_fourth)
            throw invariant_error(
                "quartic_structure_check: 4th difference at offset " +
                std::to_string(i) + " is " + to_string(diffs[i]) +
                ", expected 24*n*q^5 = " + to_string(expected_fourth));
        if (i + 1 < diffs.size() && diffs[i + 1] != diffs[i])
            throw invariant_error(
                "quartic_structure_check: 5th difference is nonzero at offset " +
                std::to_string(i));
    }
    return QuarticCertificate{4, leading, expected_fourth};
}

} // namespace dedekind
