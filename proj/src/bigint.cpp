#include "dedekind/bigint.hpp"

#include <cctype>

namespace dedekind {

BigInt parse_bigint(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw precondition_error("parse_bigint: no digits in \"" + text + "\"");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw precondition_error("parse_bigint: invalid integer \"" + text + "\"");
    // Strip leading zeros: cpp_int's string constructor would read them as
    // an octal prefix.
    while (i + 1 < text.size() && text[i] == '0')
        ++i;
    BigInt value(text.substr(i));
    return negative ? -value : value;
}

std::string to_string(const BigInt& n) {
    return n.str();
}

BigInt mod_floor(const BigInt& x, const BigInt& m) {
    if (m < 1)
        throw precondition_error("mod_floor: modulus must be >= 1");
    BigInt r = x % m; // truncated remainder
    if (r < 0)
        r += m;
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m < 2)
        throw precondition_error("mod_inverse: modulus must be >= 2");
    // Extended Euclid on (a mod m, m), tracking only the coefficient of a.
    BigInt r0 = mod_floor(a, m), r1 = m;
    BigInt x0 = 1, x1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 -= q * r1;
        x0 -= q * x1;
        r0.swap(r1);
        x0.swap(x1);
    }
    if (r0 != 1)
        throw precondition_error("mod_inverse: arguments are not coprime (gcd = " +
                                 to_string(r0) + ")");
    return mod_floor(x0, m);
}

} // namespace dedekind
