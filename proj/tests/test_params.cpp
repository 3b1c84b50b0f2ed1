#include <catch2/catch_amalgamated.hpp>

#include "dunwoody/params.hpp"

using namespace dunwoody;

TEST_CASE("parameter validation normalizes r and s") {
    auto p = validate_params(1, 1, 1, 2, 5, 3);
    CHECK(p.d == 4);
    CHECK(p.r == 1);
    CHECK(p.s == 1);

    auto q = validate_params(1, 0, 0, 2, 0, 0);
    CHECK(q.d == 2);
    CHECK(q.r == 0);
    CHECK(q.s == 0);

    auto neg = validate_params(2, 0, 1, 3, -7, -4);
    CHECK(neg.r == mod(-7, 5));
    CHECK(neg.s == 2);
}

TEST_CASE("parameter validation rejects bad input") {
    CHECK_THROWS_AS(validate_params(0, 0, 0, 3, 0, 0), param_error);
    CHECK_THROWS_AS(validate_params(1, 1, 1, 0, 0, 0), param_error);
    CHECK_THROWS_AS(validate_params(1, 1, 1, -2, 0, 0), param_error);
    CHECK_THROWS_AS(validate_params(-1, 1, 1, 2, 0, 0), param_error);

    try {
        validate_params(0, 0, 0, 3, 0, 0);
    } catch (const param_error& e) {
        CHECK(e.reason == param_error::code::zero_d);
    }
    try {
        validate_params(1, 1, 1, 0, 0, 0);
    } catch (const param_error& e) {
        CHECK(e.reason == param_error::code::non_positive_n);
    }
}

TEST_CASE("the parameter equivalence swaps b and c and acts as stated") {
    auto p = validate_params(1, 1, 1, 2, 1, 0);
    auto q = equivalent_params(p);
    CHECK(q.a == 1);
    CHECK(q.b == 1);
    CHECK(q.c == 1);
    CHECK(q.n == 2);
    CHECK(q.r == 3);  // d - r
    CHECK(q.s == 1);  // n - s - 1

    auto p2 = validate_params(2, 0, 0, 3, 1, 2);
    auto q2 = equivalent_params(p2);
    CHECK(q2.r == 3);
    CHECK(q2.s == 0);
}

TEST_CASE("the parameter equivalence is an involution") {
    for (int64 a = 0; a <= 3; ++a)
        for (int64 b = 0; b <= 3; ++b)
            for (int64 c = 0; c <= 3; ++c) {
                if (2 * a + b + c == 0) continue;
                for (int64 n = 1; n <= 4; ++n)
                    for (int64 r = 0; r < 2 * a + b + c; ++r)
                        for (int64 s = 0; s < n; ++s) {
                            auto p = validate_params(a, b, c, n, r, s);
                            CHECK(equivalent_params(equivalent_params(p)) == p);
                        }
            }
}
