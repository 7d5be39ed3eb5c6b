#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dedekind/dedekind_sum.hpp"
#include "test_support.hpp"

using namespace dedekind;

TEST_CASE("Pair validates its invariants") {
    CHECK_NOTHROW(Pair(0, 1));
    CHECK_NOTHROW(Pair(-3, 7));
    CHECK_THROWS_AS(Pair(2, 4), precondition_error);
    CHECK_THROWS_AS(Pair(0, 5), precondition_error);
    CHECK_THROWS_AS(Pair(1, 0), precondition_error);
    CHECK_THROWS_AS(Pair(1, -2), precondition_error);
}

TEST_CASE("definitional sum fixtures") {
    CHECK(sum_definitional(Pair(2, 7)) == Rational(6, 7));
    CHECK(sum_definitional(Pair(1, 2)) == Rational(0));
    // Two-term sum by hand: 12*(1/36 + 1/36) = 2/3.
    CHECK(sum_definitional(Pair(1, 3)) == Rational(2, 3));
    CHECK(sum_definitional(Pair(1, 3)) ==
          12 * (Rational(1, 36) + Rational(1, 36)));
    CHECK(sum_definitional(Pair(0, 1)) == Rational(0));
    CHECK(sum_definitional(Pair(-2, 7)) == Rational(-6, 7));
}

TEST_CASE("bigint path of the definitional sum matches the dispatching one") {
    for (int b = 1; b <= 60; ++b)
        for (int a = 0; a < b; ++a)
            if (std::gcd(a, b) == 1)
                CHECK(detail::sum_definitional_bigint(a, b) ==
                      sum_definitional(Pair(a, b)));
}

TEST_CASE("fast sum fixtures") {
    CHECK(sum_fast(Pair(2, 7)) == Rational(6, 7));
    CHECK(sum_fast(Pair(0, 1)) == Rational(0));
    CHECK(sum_fast(Pair(1, 2)) == Rational(0));
    CHECK(sum_fast(BigInt(104043), BigInt(9366455)) == Rational(6, 7));
    CHECK(sum_fast(BigInt(7), BigInt(2)) == Rational(0));
    CHECK_THROWS_AS(sum_fast(BigInt(2), BigInt(4)), precondition_error);
}

TEST_CASE("oracle equivalence: fast == definitional, exhaustive small b") {
    for (int b = 1; b <= 150; ++b)
        for (int a = 0; a < b; ++a)
            if (std::gcd(a, b) == 1)
                REQUIRE(sum_fast(BigInt(a), BigInt(b)) ==
                        sum_definitional(Pair(a, b)));
}

TEST_CASE("oracle equivalence on random pairs") {
    for (int i = 0; i < 200; ++i) {
        const Pair p = test::rand_coprime_pair(3000, -100000, 100000);
        CHECK(sum_fast(p) == sum_definitional(p));
    }
}

TEST_CASE("reciprocity right-hand side") {
    // 1/1 + 1/1 + 1/1 - 3 = 0, consistent with 2*S(1,1) = 0.
    CHECK(reciprocity_rhs(1, 1) == Rational(0));
    // 2/7 + 7/2 + 1/14 - 3 = 12/14 = 6/7; cross-check S(2,7) + S(7,2).
    CHECK(reciprocity_rhs(2, 7) == Rational(6, 7));
    CHECK(reciprocity_rhs(2, 7) ==
          Rational(2, 7) + Rational(7, 2) + Rational(1, 14) - Rational(3));
    CHECK(reciprocity_rhs(2, 7) ==
          sum_fast(BigInt(2), BigInt(7)) + sum_fast(BigInt(7), BigInt(2)));
    CHECK(reciprocity_rhs(196, 157) ==
          sum_fast(BigInt(196), BigInt(157)) + sum_fast(BigInt(157), BigInt(196)));
    CHECK_THROWS_AS(reciprocity_rhs(2, 4), precondition_error);
    CHECK_THROWS_AS(reciprocity_rhs(0, 5), precondition_error);
    CHECK_THROWS_AS(reciprocity_rhs(3, -1), precondition_error);
}

TEST_CASE("reciprocity law on random coprime pairs") {
    for (int i = 0; i < 300; ++i) {
        const Pair p = test::rand_coprime_pair(100000, 1, 100000);
        CHECK(sum_fast(p.a(), p.b()) + sum_fast(p.b(), p.a()) ==
              reciprocity_rhs(p.a(), p.b()));
    }
}

TEST_CASE("periodicity: S(a + m*b, b) == S(a, b)") {
    for (int i = 0; i < 300; ++i) {
        const Pair p = test::rand_coprime_pair(50000, -50000, 50000);
        const BigInt m = test::rand_int(-50, 50);
        CHECK(sum_fast(p.a() + m * p.b(), p.b()) == sum_fast(p));
    }
}

TEST_CASE("oddness: S(-a, b) == -S(a, b)") {
    CHECK(negate_arg(Pair(2, 7)) == Rational(-6, 7));
    CHECK(negate_arg(Pair(1, 2)) == Rational(0));
    CHECK(negate_arg(Pair(1, 3)) == -sum_definitional(Pair(1, 3)));
    for (int i = 0; i < 300; ++i) {
        const Pair p = test::rand_coprime_pair(50000, -50000, 50000);
        CHECK(sum_fast(-p.a(), p.b()) == -sum_fast(p));
        CHECK(negate_arg(p) == -sum_fast(p));
    }
}

TEST_CASE("inverse-argument invariance") {
    // a = 2, b = 7: a* = 4; both sides by the definitional oracle.
    CHECK(sum_definitional(Pair(4, 7)) == sum_definitional(Pair(2, 7)));
    CHECK(inverse_arg_invariance_check(2, 7));
    for (int b : {2, 3, 10, 157, 9366455})
        CHECK(inverse_arg_invariance_check(1, b));
    CHECK(sum_definitional(Pair(mod_inverse(5, 157), 157)) ==
          sum_definitional(Pair(5, 157)));
    CHECK(inverse_arg_invariance_check(5, 157));
    CHECK_THROWS_AS(inverse_arg_invariance_check(1, 1), precondition_error);
    for (int i = 0; i < 300; ++i) {
        const Pair p = test::rand_coprime_pair(100000, -100000, 100000);
        if (p.b() < 2)
            continue;
        CHECK(inverse_arg_invariance_check(p.a(), p.b()));
    }
}

TEST_CASE("integer-value criterion: b | a^2+1 <=> S == 0") {
    CHECK(is_integer_value(Pair(1, 2)));
    CHECK_FALSE(is_integer_value(Pair(2, 7)));
    CHECK(is_integer_value(Pair(5, 13)));
    CHECK(sum_fast(BigInt(5), BigInt(13)) == Rational(0));
    CHECK(sum_definitional(Pair(5, 13)) == Rational(0));
    for (int b = 1; b <= 600; ++b) {
        for (int a = 0; a < b; ++a) {
            if (std::gcd(a, b) != 1)
                continue;
            const Pair p(a, b);
            const Rational v = sum_fast(p);
            CHECK(is_integer_value(p) == v.is_integer());
            if (is_integer_value(p))
                CHECK(v == Rational(0));
        }
    }
}

TEST_CASE("denominator law: den S(a, q(a^2+1)/t) == q") {
    for (int i = 0; i < 300; ++i) {
        const auto [a, q, t] = test::rand_structured_tuple();
        const BigInt b = q * (a * a + 1) / t;
        REQUIRE(gcd(abs(a), b) == 1); // forced by gcd(a,q) == 1
        CHECK(sum_fast(a, b).den() == q);
    }
}
