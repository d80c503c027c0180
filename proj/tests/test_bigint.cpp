#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusion/bigint.hpp"

using fusion::BigInt;
using fusion::Rational;

TEST_CASE("small arithmetic round trips") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-17).to_string() == "-17");
    CHECK((BigInt(1000000000) * BigInt(1000000000)).to_string() == "1000000000000000000");
    CHECK((BigInt(123) + BigInt(-123)).is_zero());
    CHECK((BigInt(5) - BigInt(9)) == BigInt(-4));
    CHECK(BigInt(-3) * BigInt(-4) == BigInt(12));
    CHECK(BigInt(7).to_long_long() == 7);
    CHECK(BigInt(-7).to_long_long() == -7);
}

TEST_CASE("factorial 30 known value") {
    BigInt f(1);
    for (int i = 2; i <= 30; ++i) f *= BigInt(i);
    CHECK(f.to_string() == "265252859812191058636308480000000");
    BigInt g = f;
    g -= f;
    CHECK(g.is_zero());
}

TEST_CASE("comparisons and ordering") {
    CHECK(BigInt(-5) < BigInt(3));
    CHECK(BigInt(-5) < BigInt(-2));
    BigInt big = BigInt(1);
    for (int i = 0; i < 100; ++i) big = big * BigInt(3);
    CHECK(BigInt(2) < big);
    CHECK(-big < BigInt(0));
}

TEST_CASE("word boundary carries") {
    BigInt w(4294967295ll);  // 2^32 - 1
    CHECK((w * w).to_string() == "18446744065119617025");
    CHECK((w + BigInt(1)).to_string() == "4294967296");
    CHECK((w * w + w + w + BigInt(1)).to_string() == "18446744073709551616");  // 2^64
    BigInt big = (w + BigInt(1)) * (w + BigInt(1));
    CHECK((big - BigInt(1)).to_string() == "18446744073709551615");
    CHECK(BigInt(4294967296ll).to_long_long() == 4294967296ll);
}

TEST_CASE("gcd and rational reduction") {
    CHECK(BigInt::gcd(BigInt(48), BigInt(36)) == BigInt(12));
    CHECK(BigInt::gcd(BigInt(0), BigInt(9)) == BigInt(9));
    Rational r(BigInt(84), BigInt(-126));
    CHECK(r.to_string() == "-2/3");
    Rational s = r * Rational(BigInt(-3), BigInt(2));
    CHECK(s.is_integer());
    CHECK(s.num() == BigInt(1));
    Rational t = Rational(BigInt(1), BigInt(6)) + Rational(BigInt(1), BigInt(3));
    CHECK(t.to_string() == "1/2");
}

TEST_CASE("rational stays exact over long products") {
    // telescoping: prod (i+1)/i = n
    Rational p(1);
    for (int i = 1; i < 60; ++i) p *= Rational(BigInt(i + 1), BigInt(i));
    CHECK(p.is_integer());
    CHECK(p.num() == BigInt(60));
}
