#include "dedekind/rational.hpp"

namespace dedekind {

void Rational::reduce() {
    if (den_ == 0)
        throw precondition_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1)
        return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_bigint(text));
    return Rational(parse_bigint(text.substr(0, slash)),
                    parse_bigint(text.substr(slash + 1)));
}

} // namespace dedekind
