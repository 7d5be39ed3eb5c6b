#include "dedekind/cfrac.hpp"

#include <sstream>

#include "dedekind/dedekind_sum.hpp"

namespace dedekind {

namespace {

std::vector<BigInt> parse_quotient_list(const std::string& text) {
    std::vector<BigInt> out;
    if (text.empty())
        return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(parse_bigint(item));
    if (!text.empty() && text.back() == ',')
        throw precondition_error("parse_periodic_cf: trailing comma");
    return out;
}

void validate_cf(const PeriodicCF& cf) {
    if (cf.period.empty())
        throw precondition_error("PeriodicCF: period must be nonempty");
    for (std::size_t i = 1; i < cf.head.size(); ++i)
        if (cf.head[i] < 1)
            throw precondition_error("PeriodicCF: partial quotient after the "
                                     "first must be >= 1");
    // Period entries repeat, so each one occurs as a non-leading quotient.
    for (const BigInt& a : cf.period)
        if (a < 1)
            throw precondition_error("PeriodicCF: periodic partial quotients "
                                     "must be >= 1");
}

const BigInt& quotient_at(const PeriodicCF& cf, std::size_t i) {
    if (i < cf.head.size())
        return cf.head[i];
    return cf.period[(i - cf.head.size()) % cf.period.size()];
}

} // namespace

PeriodicCF parse_periodic_cf(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw precondition_error("parse_periodic_cf: expected \"head;period\"");
    PeriodicCF cf{parse_quotient_list(text.substr(0, semi)),
                  parse_quotient_list(text.substr(semi + 1))};
    validate_cf(cf);
    return cf;
}

std::vector<Convergent> convergents(const PeriodicCF& cf, int max_order) {
    validate_cf(cf);
    if (max_order < 0)
        throw precondition_error("convergents: max_order must be >= 0");

    std::vector<Convergent> out;
    out.reserve(static_cast<std::size_t>(max_order) + 1);
    BigInt p_prev = 1, p_prev2 = 0; // p_{-1}, p_{-2}
    BigInt q_prev = 0, q_prev2 = 1; // q_{-1}, q_{-2}
    for (int i = 0; i <= max_order; ++i) {
        const BigInt& ai = quotient_at(cf, static_cast<std::size_t>(i));
        BigInt p = ai * p_prev + p_prev2;
        BigInt q = ai * q_prev + q_prev2;
        // Determinant invariant p_i*q_{i-1} - p_{i-1}*q_i = +-1 gives lowest terms.
        if (gcd(abs(p), abs(q)) != 1)
            throw invariant_error("convergents: convergent not in lowest terms");
        out.push_back(Convergent{i, p, q});
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q);
    }
    return out;
}

std::vector<Convergent> filter_by_value(const std::vector<Convergent>& convs,
                                        const Rational& target) {
    std::vector<Convergent> out;
    for (const Convergent& c : convs) {
        if (c.den < 1 || gcd(abs(c.num), abs(c.den)) != 1)
            continue;
        if (sum_fast(mod_floor(c.num, c.den), c.den) == target)
            out.push_back(c);
    }
    return out;
}

} // namespace dedekind
