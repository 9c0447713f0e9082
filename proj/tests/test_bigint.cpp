#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotforge/bigint.hpp"
#include "knotforge/rational.hpp"

using knotforge::BigInt;
using knotforge::Rational;

TEST_CASE("bigint small arithmetic") {
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(7) + BigInt(-7) == BigInt(0));
    CHECK(BigInt(1000000000LL) * BigInt(1000000000LL) ==
          BigInt::from_string("1000000000000000000"));
    CHECK((BigInt(-17) / BigInt(5)) == BigInt(-3));
    CHECK((BigInt(-17) % BigInt(5)) == BigInt(-2));
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt::from_string("-000123") == BigInt(-123));
    CHECK(BigInt(123456789012345LL).to_string() == "123456789012345");
    CHECK(BigInt(-42).to_int64() == -42);
}

TEST_CASE("bigint divmod identity against int64") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng()) % 1000000000000LL;
        long long b = static_cast<long long>(rng()) % 1000000LL;
        if (b == 0) b = 7;
        BigInt A(a), B(b);
        auto dm = A.divmod(B);
        CHECK(dm.quot == BigInt(a / b));
        CHECK(dm.rem == BigInt(a % b));
    }
}

TEST_CASE("bigint divmod identity on large operands") {
    std::mt19937_64 rng(999);
    auto random_big = [&](int limbs) {
        BigInt x(0);
        for (int i = 0; i < limbs; ++i)
            x = x * BigInt(1000000000LL) + BigInt(static_cast<long long>(rng() % 1000000000ULL));
        return rng() % 2 ? x : -x;
    };
    for (int i = 0; i < 500; ++i) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 8));
        BigInt b = random_big(1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        auto dm = a.divmod(b);
        CHECK(dm.quot * b + dm.rem == a);
        CHECK(dm.rem.abs() < b.abs());
        if (!dm.rem.is_zero()) CHECK(dm.rem.signum() == a.signum());
    }
}

TEST_CASE("bigint divisor edge cases around limb boundaries") {
    BigInt base = BigInt::from_string("1000000000");
    BigInt x = BigInt::from_string("999999999999999999999999999");
    CHECK(x % base == BigInt(999999999));
    CHECK((x + BigInt(1)) % base == BigInt(0));
    BigInt y = BigInt::from_string("123456789987654321123456789987654321");
    auto dm = y.divmod(BigInt::from_string("987654321123456789"));
    CHECK(dm.quot * BigInt::from_string("987654321123456789") + dm.rem == y);
    // divisor with small top limb exercises normalization
    BigInt z = BigInt::from_string("2000000000000000001");
    auto dm2 = y.divmod(z);
    CHECK(dm2.quot * z + dm2.rem == y);
}

TEST_CASE("bigint gcd and pow") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::pow(BigInt(3), 20) == BigInt(3486784401LL));
    CHECK(BigInt::pow(BigInt(-2), 63) == BigInt::from_string("-9223372036854775808"));
}

TEST_CASE("rational reduction and arithmetic") {
    Rational half(1, 2);
    CHECK((half + half) == Rational(1));
    CHECK((Rational(3, 4) - Rational(1, 4)) == half);
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 3) / Rational(2, 3)) == half);
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(1, 3) < Rational(1, 2));
}
