#include <doctest.h>

#include <random>

#include "hbk/lexval.hpp"

using namespace hbk;

TEST_CASE("lexicographic comparison") {
    CHECK(LexVal({0, 5}).cmp(LexVal({1, -10})) < 0);
    CHECK(LexVal({1, 0}) == LexVal({1, 0}));
    CHECK(LexVal({2, 3}).cmp(LexVal::infinity(2)) < 0);
    CHECK(LexVal::infinity(2) == LexVal::infinity(2));
    CHECK(ordering_name(LexVal({0, 5}).cmp(LexVal({1, -10}))) == "LT");
    CHECK(ordering_name(LexVal({1, 0}).cmp(LexVal({1, 0}))) == "EQ");
    CHECK(ordering_name(LexVal::infinity(2).cmp(LexVal({2, 3}))) == "GT");
    CHECK_THROWS_AS((void)LexVal({1, 2}).cmp(LexVal({1, 2, 3})), dimension_error);
}

TEST_CASE("projection to leading coordinates") {
    CHECK(LexVal({2, 7}).project(1) == LexVal({2}));
    CHECK(LexVal::infinity(2).project(1).is_infinity());
    CHECK(LexVal({0, -3, 1}).project(2) == LexVal({0, -3}));
    CHECK(LexVal({0, -3, 1}).project(2, true) == LexVal({0}));
    CHECK(LexVal({4, 5}).project(1, true).dim() == 0);
    CHECK_THROWS_AS((void)LexVal({1, 2}).project(0), index_error);
    CHECK_THROWS_AS((void)LexVal({1, 2}).project(3), index_error);
}

TEST_CASE("absolute value") {
    CHECK(LexVal({-1, 4}).abs() == LexVal({1, -4}));
    CHECK(LexVal({0, 0}).abs() == LexVal({0, 0}));
    CHECK(LexVal({0, 2}).abs() == LexVal({0, 2}));
    CHECK_THROWS_AS((void)LexVal::infinity(2).abs(), value_error);
}

TEST_CASE("arithmetic with infinity") {
    CHECK((LexVal({1, 2}) + LexVal::infinity(2)).is_infinity());
    CHECK(LexVal({1, 2}) + LexVal({-1, 3}) == LexVal({0, 5}));
    CHECK_THROWS_AS((void)-LexVal::infinity(2), value_error);
}

TEST_CASE("order is total and compatible with addition") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-20, 20);
    auto rand_val = [&] {
        return LexVal({dist(rng), dist(rng), dist(rng)});
    };
    for (int it = 0; it < 300; ++it) {
        LexVal a = rand_val(), b = rand_val(), c = rand_val();
        int ab = a.cmp(b);
        CHECK(b.cmp(a) == -ab);
        if (ab < 0 && b.cmp(c) < 0) CHECK(a.cmp(c) < 0);
        if (ab < 0) CHECK((a + c).cmp(b + c) < 0);
        CHECK((a + b).abs() <= a.abs() + b.abs());
        CHECK((a.scaled(-3)).abs() == a.abs().scaled(3));
        if (a <= b) CHECK(a.project(2) <= b.project(2));
        if (a.is_nonneg()) CHECK(a.project(2).is_nonneg());
    }
}

TEST_CASE("text round trip") {
    CHECK(LexVal({2, -3}).str() == "(2,-3)");
    CHECK(LexVal::infinity(2).str() == "inf");
    CHECK(LexVal::parse("(2,-3)", 2) == LexVal({2, -3}));
    CHECK(LexVal::parse(" ( 0 , 12 ) ", 2) == LexVal({0, 12}));
    CHECK(LexVal::parse("inf", 2).is_infinity());
    CHECK_THROWS_AS(LexVal::parse("(1,2", 2), parse_error);
    CHECK_THROWS_AS(LexVal::parse("(1,2)", 3), dimension_error);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int it = 0; it < 50; ++it) {
        LexVal v({dist(rng), dist(rng)});
        CHECK(LexVal::parse(v.str(), 2) == v);
    }
}
