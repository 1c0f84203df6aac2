#include <doctest.h>

#include "hypercross/rational.hpp"
#include "hypercross/rng.hpp"

using namespace hypercross;

TEST_CASE("make_rat normalizes to lowest terms with positive denominator") {
    const Rat r = make_rat(4, -8);
    CHECK(numerator(r) == -1);
    CHECK(denominator(r) == 2);
    CHECK(make_rat(21, 7) == 3);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rat handles integers, fractions and garbage") {
    CHECK(parse_rat("5") == 5);
    CHECK(parse_rat("-7/21") == make_rat(-1, 3));
    CHECK(numerator(parse_rat("-7/21")) == -1);
    CHECK(parse_rat("3/-6") == make_rat(-1, 2));
    CHECK_THROWS_AS(parse_rat("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact regardless of association order") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = [&] {
            return make_rat(static_cast<long long>(rng.below(2001)) - 1000,
                            static_cast<long long>(rng.below(999)) + 1);
        };
        const Rat a = r(), b = r(), c = r();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(2 * 10 - 1, 10 - 1) == 92378);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, 0) == 1);
}
