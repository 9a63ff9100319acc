#include <doctest.h>

#include <set>
#include <stdexcept>

#include "ctf/group.hpp"

using namespace ctf;

TEST_CASE("cyclic group arithmetic") {
    const auto z5 = AbelianGroup::cyclic(5);
    CHECK(z5.order() == 5);
    CHECK(z5.add(3, 4) == 2);
    CHECK(z5.negate(2) == 3);
    CHECK(z5.negate(0) == 0);
    CHECK(z5.subtract(1, 3) == 3);
    CHECK(z5.from_integer(-7) == 3);
    CHECK(z5.from_integer(12) == 2);
}

TEST_CASE("product group matches componentwise arithmetic") {
    const AbelianGroup g({2, 3});
    CHECK(g.order() == 6);
    for (std::int64_t a = 0; a < 6; ++a) {
        CHECK(g.add(a, g.negate(a)) == 0);
        for (std::int64_t b = 0; b < 6; ++b) {
            const auto s = g.add(a, b);
            CHECK(s % 2 == (a % 2 + b % 2) % 2);
            CHECK(s / 2 == (a / 2 + b / 2) % 3);
        }
    }
    CHECK(g.from_integer(1) == 1 + 2 * 1);
    CHECK(g.from_integer(5) == 1 + 2 * 2);
}

TEST_CASE("Klein four group has exponent two") {
    const auto v = AbelianGroup::parse("2,2");
    CHECK(v.order() == 4);
    std::set<std::int64_t> sums;
    for (std::int64_t a = 0; a < 4; ++a) {
        CHECK(v.add(a, a) == 0);
        CHECK(v.negate(a) == a);
        sums.insert(v.add(a, 1));
    }
    CHECK(sums.size() == 4);
}

TEST_CASE("parse and format") {
    CHECK(AbelianGroup::parse("4").moduli() == std::vector<std::int64_t>{4});
    CHECK(AbelianGroup::parse("2,3,5").order() == 30);
    CHECK(AbelianGroup().order() == 1);
    CHECK_THROWS_AS(AbelianGroup::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup::parse("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup::parse("2,a"), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup::parse("99999999999"), std::invalid_argument);
    CHECK_FALSE(AbelianGroup::parse("2,3").to_string().empty());
}
