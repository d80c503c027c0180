#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusion/partition.hpp"
#include "oracles.hpp"

using namespace fusion;

TEST_CASE("canonical form and parsing") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("3,1").to_string() == "3,1");
    CHECK(Partition{}.to_string() == "0");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK(AffineWeight::parse("[1,2,1]").to_string() == "[1,2,1]");
}

TEST_CASE("weight to partition bijection") {
    // Dynkin labels are (m_1, ..., m_n) with the affine label last
    FusionContext ctx(3, 4);
    CHECK(weight_to_partition(AffineWeight{{2, 1, 1}}, ctx) == Partition({3, 1}));
    CHECK(weight_to_partition(AffineWeight{{1, 2, 1}}, ctx) == Partition({3, 2}));
    CHECK(weight_to_partition(AffineWeight{{0, 0, 4}}, ctx) == Partition{});

    FusionContext ctx53(5, 3);
    CHECK(partition_to_weight(Partition({2, 2, 1}), ctx53) == AffineWeight{{0, 1, 1, 0, 1}});
    CHECK(partition_to_weight(Partition({3, 1}), ctx) == AffineWeight{{2, 1, 1}});
    CHECK(partition_to_weight(Partition{}, ctx) == AffineWeight{{0, 0, 4}});

    CHECK_THROWS_AS(partition_to_weight(Partition({5}), ctx), std::invalid_argument);
    CHECK_THROWS_AS(partition_to_weight(Partition({1, 1, 1}), ctx), std::invalid_argument);
}

TEST_CASE("round trip on the whole level for several contexts") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            FusionContext ctx(n, k);
            for (int i = 0; i < ctx.basis_size(); ++i) {
                Partition p = weight_to_partition(ctx.weight(i), ctx);
                CHECK(partition_to_weight(p, ctx) == ctx.weight(i));
                CHECK(p.fits_box(n - 1, k));
            }
        }
}

TEST_CASE("transpose examples and involution property") {
    CHECK(transpose(Partition({4, 4, 1})) == Partition({3, 2, 2, 2}));
    CHECK(transpose(Partition({2, 2, 1, 1})) == Partition({4, 2}));
    CHECK(transpose(transpose(Partition({4, 2, 2, 1}))) == Partition({4, 2, 2, 1}));

    oracles::Rng rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        Partition p = oracles::random_partition(rng, 30);
        CHECK(transpose(transpose(p)) == p);
    }
}

TEST_CASE("dual weight") {
    FusionContext ctx(3, 4);
    CHECK(dual_weight(Partition({3, 1}), ctx) == Partition({3, 2}));
    CHECK(dual_weight(Partition{}, ctx) == Partition{});
    CHECK(dual_weight(Partition({4}), ctx) == Partition({4, 4}));

    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k) {
            FusionContext c(n, k);
            for (int i = 0; i < c.basis_size(); ++i) {
                Partition p = c.partition(i);
                Partition d = dual_weight(p, c);
                CHECK(d.fits_box(n - 1, k));
                CHECK(dual_weight(d, c) == p);
            }
        }
}

TEST_CASE("hook content product") {
    CHECK(hook_content_product(Partition{}, 3) == Rational(1));
    CHECK(hook_content_product(Partition({1}), 3) == Rational(2));
    CHECK(hook_content_product(Partition({2, 1}), 4) == Rational(8));

    // equals the count of semistandard tableaux in n-1 letters
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k) {
            FusionContext ctx(n, k);
            for (int i = 0; i < ctx.basis_size(); ++i) {
                Rational r = hook_content_product(ctx.partition(i), n);
                CHECK(r.is_integer());
                CHECK(r.num() == oracles::ssyt_count(ctx.partition(i), n - 1));
            }
        }
}

TEST_CASE("level enumeration size and determinism") {
    CHECK(FusionContext(2, 1).basis_size() == 2);
    CHECK(FusionContext(3, 4).basis_size() == 15);
    CHECK(FusionContext(5, 3).basis_size() == 35);
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 4; ++k) {
            FusionContext a(n, k);
            FusionContext b(n, k);
            CHECK(a.basis_size() == binomial(n + k - 1, k).to_long_long());
            CHECK(enumerate_level(a) == a.basis());
            REQUIRE(a.basis_size() == b.basis_size());
            for (int i = 0; i < a.basis_size(); ++i) CHECK(a.weight(i) == b.weight(i));
            // colex order on Dynkin tuples
            for (int i = 0; i + 1 < a.basis_size(); ++i) {
                std::vector<int> x = a.weight(i).dynkin;
                std::vector<int> y = a.weight(i + 1).dynkin;
                std::reverse(x.begin(), x.end());
                std::reverse(y.begin(), y.end());
                CHECK(x < y);
            }
        }
}
