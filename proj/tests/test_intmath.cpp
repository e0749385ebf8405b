#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bch/intmath.hpp"

using namespace bch;

TEST_CASE("qadic_expand produces big-endian digits with leading zeros") {
    CHECK(qadic_expand(14, 3, 4).digits == std::vector<int>{0, 1, 1, 2});
    CHECK(qadic_expand(0, 5, 3).digits == std::vector<int>{0, 0, 0});
    CHECK(qadic_expand(8, 3, 2).digits == std::vector<int>{2, 2});
    CHECK_THROWS_AS(qadic_expand(9, 3, 2), error);  // 9 >= 3^2
    CHECK_THROWS_AS(qadic_expand(-1, 3, 2), error);
}

TEST_CASE("qadic_value inverts qadic_expand") {
    Digits d{3, {0, 1, 1, 2}};
    CHECK(qadic_value(d) == 14);
    CHECK(qadic_value(Digits{5, {0, 0, 0}}) == 0);
    CHECK(qadic_value(Digits{3, {2, 2}}) == 8);
}

TEST_CASE("round trip over random (a, q, len)") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 1000; ++trial) {
        Int q = 2 + static_cast<Int>(rng() % 9);
        Int len = 1 + static_cast<Int>(rng() % 12);
        Int top = checked_pow(q, len);
        Int a = static_cast<Int>(rng() % static_cast<std::uint64_t>(top));
        CHECK(qadic_value(qadic_expand(a, q, len)) == a);
    }
}

TEST_CASE("lex order agrees with integer order") {
    CHECK(lex_compare(Digits{3, {0, 1, 2}}, Digits{3, {0, 2, 0}}) == std::strong_ordering::less);
    CHECK(lex_compare(Digits{3, {1, 0}}, Digits{3, {1, 0}}) == std::strong_ordering::equal);
    CHECK(lex_compare(Digits{3, {2, 0, 0}}, Digits{3, {1, 2, 2}}) == std::strong_ordering::greater);
    CHECK_THROWS_AS(lex_compare(Digits{3, {1, 0}}, Digits{3, {1, 0, 0}}), error);

    for (Int q : {2, 3, 5}) {
        Int len = 3;
        Int top = checked_pow(q, len);
        for (Int a = 0; a < top; ++a) {
            for (Int b = 0; b < top; ++b) {
                auto digit_order = lex_compare(qadic_expand(a, q, len), qadic_expand(b, q, len));
                CHECK(digit_order == (a <=> b));
            }
        }
    }
}

TEST_CASE("count_nondiv equals its defining count") {
    CHECK(count_nondiv(5, 3) == 3);  // {1,2,4}
    CHECK(count_nondiv(2, 3) == 1);
    CHECK(count_nondiv(8, 3) == 5);
    for (Int q : {2, 3, 4, 5, 7, 8, 9}) {
        for (Int a = 1; a <= 10000; ++a) {
            Int brute = 0;
            for (Int x = 1; x <= a - 1; ++x)
                if (x % q != 0) ++brute;
            if (count_nondiv(a, q) != brute) {
                REQUIRE(count_nondiv(a, q) == brute);  // report only on failure
            }
        }
    }
}

TEST_CASE("ilog is the exact floor log") {
    CHECK(ilog(28, 3) == 3);
    CHECK(ilog(1, 7) == 0);
    CHECK(ilog(32, 2) == 5);
    CHECK(ilog(checked_pow(3, 40), 3) == 40);
    CHECK(ilog(checked_pow(3, 40) - 1, 3) == 39);
}

TEST_CASE("checked arithmetic rejects overflow instead of wrapping") {
    Int big = checked_pow(2, 126);
    CHECK_THROWS_AS(checked_mul(big, 4), error);
    CHECK_THROWS_AS(checked_add(big, big), error);
    CHECK_THROWS_AS(checked_pow(2, 128), error);
    CHECK(to_string(checked_pow(10, 30)) == "1000000000000000000000000000000");
    CHECK(parse_int("-1000000000000000000000000000000") == -checked_pow(10, 30));
}

TEST_CASE("floor and exact division") {
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, 2) == 3);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(exact_div(84, 7) == 12);
    CHECK_THROWS_AS(exact_div(85, 7), error);
}
