/**
 * @file rational.hpp
 * @brief Exact rationals in canonical reduced form.
 *
 * Invariants held at all times: gcd(|num|, den) == 1 and den >= 1, so equal
 * values have identical representations and the reduced denominator of a sum
 * value can be read straight off the object.
 */
#ifndef DEDEKIND_RATIONAL_HPP
#define DEDEKIND_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "dedekind/bigint.hpp"
#include "dedekind/errors.hpp"

namespace dedekind {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT: implicit, integers embed
    Rational(int n) : num_(n), den_(1) {}               // NOLINT
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator-(const Rational& x) {
        Rational r;
        r.num_ = -x.num_;
        r.den_ = x.den_;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0)
            throw precondition_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    // Canonical form makes structural equality value equality.
    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const BigInt lhs = x.num_ * y.den_;
        const BigInt rhs = y.num_ * x.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    /// "num/den" for non-integers, bare "num" when den == 1 (so 0 prints as "0").
    std::string str() const;

    /// Accepts "num", "num/den"; normalizes sign and reduces ("3/-9" -> -1/3).
    static Rational parse(const std::string& text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    BigInt num_;
    BigInt den_; // always >= 1

    void reduce();
};

} // namespace dedekind

#endif // DEDEKIND_RATIONAL_HPP
