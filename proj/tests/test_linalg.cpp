#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace dunwoody;

TEST_CASE("Smith normal form basics") {
    {
        intmat id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        auto s = smith_normal_form(id3);
        CHECK(s.rank == 3);
        CHECK(s.torsion.empty());
    }
    {
        intmat m = {{2, 4}, {-2, 6}};
        auto s = smith_normal_form(m);
        REQUIRE(s.invariant_factors.size() == 2);
        CHECK(s.invariant_factors[0] == 2);
        CHECK(s.invariant_factors[1] == 10);
    }
    {
        intmat zero = {{0, 0, 0}, {0, 0, 0}};
        auto s = smith_normal_form(zero);
        CHECK(s.rank == 0);
        CHECK(cokernel(zero, 3).rank == 3);
    }
}

TEST_CASE("Smith normal form matches the minor-gcd definition on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        intmat m(rows, std::vector<bigint>(cols));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<int64>(rng() % 19) - 9;
        auto s = smith_normal_form(m);
        auto expect = testsupport::minor_gcd_invariant_factors(m);
        REQUIRE(s.invariant_factors.size() == expect.size());
        for (size_t i = 0; i < expect.size(); ++i) CHECK(s.invariant_factors[i] == expect[i]);
        for (size_t i = 1; i < s.invariant_factors.size(); ++i)
            CHECK(s.invariant_factors[i] % s.invariant_factors[i - 1] == 0);
    }
}

TEST_CASE("resultants and cyclotomic polynomials") {
    CHECK(cyclotomic(1) == intpoly{-1, 1});
    CHECK(cyclotomic(2) == intpoly{1, 1});
    CHECK(cyclotomic(6) == intpoly{1, -1, 1});
    CHECK(cyclotomic(12).degree() == 4);

    intpoly f{-1, 1};  // t - 1
    CHECK(resultant(f, cyclotomic(2)) == 2);  // f(-1) up to sign

    // Res(f, t^n - 1) of a constant is c^n
    intpoly c{7};
    CHECK(abs_big(resultant(t_power_minus_one(4), c)) == 2401);
}

TEST_CASE("circulant torsion split") {
    // t - 1 against n = 1: the only root is killed
    auto z = circulant_torsion(intpoly{-1, 1}, 1);
    CHECK(z.resultant == 0);
    CHECK(z.zero_roots == 1);
    CHECK(z.torsion_part == 1);

    // constants: |c|^n
    auto k = circulant_torsion(intpoly{-3}, 4);
    CHECK(k.resultant == 81);
    CHECK(k.zero_roots == 0);

    // Seifert row for (p,q,l,n) = (2,1,1,4): the classical closed form uses
    // the polynomial without its constant term and evaluates to 27, not 8
    auto f = seifert_circulant_poly(2, 1, 1, 4);
    auto t = circulant_torsion(f, 4);
    CHECK(t.resultant == abs_big(resultant(f, t_power_minus_one(4))));

    // vanishing factor reported as free rank: (2,1,1) with n = 3
    auto t3 = circulant_torsion(seifert_circulant_poly(2, 1, 1, 3), 3);
    CHECK(t3.resultant == 0);
    CHECK(t3.zero_roots == 1);
}

TEST_CASE("Bareiss determinant against cofactor expansion") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        size_t k = 1 + rng() % 4;
        intmat m(k, std::vector<bigint>(k));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<int64>(rng() % 15) - 7;
        std::function<bigint(const intmat&)> cof = [&](const intmat& a) -> bigint {
            if (a.size() == 1) return a[0][0];
            bigint acc = 0;
            int sign = 1;
            for (size_t j = 0; j < a.size(); ++j) {
                intmat sub;
                for (size_t i = 1; i < a.size(); ++i) {
                    std::vector<bigint> row;
                    for (size_t jj = 0; jj < a.size(); ++jj)
                        if (jj != j) row.push_back(a[i][jj]);
                    sub.push_back(row);
                }
                acc += sign * a[0][j] * cof(sub);
                sign = -sign;
            }
            return acc;
        };
        CHECK(determinant(m) == cof(m));
    }
}
