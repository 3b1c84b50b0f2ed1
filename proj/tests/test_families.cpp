#include <catch2/catch_amalgamated.hpp>

#include "dunwoody/analysis.hpp"
#include "support.hpp"

using namespace dunwoody;

TEST_CASE("two-bridge knot covering parameters and bounds") {
    auto fs = two_bridge_knot_cover(5, 2, 3);
    CHECK(fs.params.a == 2);
    CHECK(fs.params.b == 0);
    CHECK(fs.params.c == 1);
    CHECK(fs.params.n == 3);
    CHECK(fs.params.r == 1);  // beta/2 with beta even
    REQUIRE(fs.upper_bound);
    CHECK(*fs.upper_bound == 9);
    CHECK_FALSE(fs.upper_equality_expected);  // stated only above n = 3

    auto fs2 = two_bridge_knot_cover(7, 4, 4);
    REQUIRE(fs2.upper_bound);
    CHECK(*fs2.upper_bound == 20);
    CHECK(fs2.upper_equality_expected);

    auto small = two_bridge_knot_cover(3, 1, 2);
    CHECK_FALSE(small.upper_bound);  // the bound is stated for n > 2 only

    CHECK_THROWS_AS(two_bridge_knot_cover(4, 1, 3), family_error);
    CHECK_THROWS_AS(two_bridge_knot_cover(9, 3, 3), family_error);
}

TEST_CASE("two-bridge knot covering engine values match the oracle") {
    for (auto [alpha, beta, n] : std::vector<std::array<int64, 3>>{
             {5, 2, 3}, {5, 2, 4}, {7, 2, 3}, {9, 4, 4}}) {
        auto fs = two_bridge_knot_cover(alpha, beta, n);
        auto rep = analyze_family(fs);
        CAPTURE(alpha, beta, n);
        for (const auto& c : rep.checks)
            if (c.name.rfind("family_", 0) == 0) CHECK(c.pass);
        CHECK(rep.csecond_class.proper);
        CHECK(rep.csecond_class.reduced);
    }
}

TEST_CASE("the direct knot parametrization is kept for reference") {
    auto fs = two_bridge_knot_cover(5, 2, 3, std::nullopt, knot_cover_variant::direct);
    CHECK(fs.params.a == 2);
    CHECK(fs.params.b == 1);
    CHECK(fs.params.c == 1);
    CHECK(fs.params.r == 5);  // 2*beta + 1
    CHECK_FALSE(fs.upper_bound);
    // it represents the same manifold but through a non-reduced diagram
    auto rep = analyze(fs.params);
    CHECK_FALSE((rep.csecond_class.proper && rep.csecond_class.reduced));
    CHECK(rep.homology.torsion_order() == branched_cover_h1_order(5, 2, 3).order);
}

TEST_CASE("two-bridge link covering parameters") {
    auto fs = two_bridge_link_cover(4, 1, 4, 2);
    CHECK(*fs.curve_count_expected == 6);
    CHECK(*fs.upper_bound == 4 * 2 + 2 - 4);

    auto fs2 = two_bridge_link_cover(6, 1, 3, 1);
    CHECK(*fs2.upper_bound == 9);
    CHECK(*fs2.curve_count_expected == 4);

    CHECK_THROWS_AS(two_bridge_link_cover(5, 1, 3, 1), family_error);
    CHECK_THROWS_AS(two_bridge_link_cover(4, 1, 3, 0), family_error);

    // the excluded monodromies of the smallest link carry no lower bound
    auto excl = two_bridge_link_cover(2, 1, 3, 1);
    CHECK_FALSE(excl.lower_bound_formula);
    CHECK(!excl.notes.empty());
}

TEST_CASE("two-bridge link covering structure is reproduced by the engine") {
    for (auto [alpha, beta, n, s] : std::vector<std::array<int64, 4>>{
             {4, 1, 2, 1}, {4, 1, 4, 2}, {6, 1, 3, 2}, {8, 3, 4, 1}}) {
        auto rep = analyze_family(two_bridge_link_cover(alpha, beta, n, s));
        CAPTURE(alpha, beta, n, s);
        for (const auto& c : rep.checks) {
            if (c.name == "family_curve_count" || c.name == "family_crossing_profile" ||
                c.name == "family_upper_bound_holds" || c.name == "family_boundary")
                CHECK(c.pass);
        }
    }
}

TEST_CASE("theta covering expectations") {
    auto fs = theta_cover(3, 1, 5, 2);
    CHECK(*fs.curve_count_expected == 2);
    CHECK(*fs.boundary_expected == std::vector<int64>{2, 2});
    CHECK(*fs.upper_bound == 10);

    auto fs2 = theta_cover(5, 3, 4, 2);
    CHECK(*fs2.curve_count_expected == 3);
    CHECK(*fs2.boundary_expected == std::vector<int64>{1, 1});
    CHECK(*fs2.upper_bound == 16);

    CHECK_THROWS_AS(theta_cover(3, 1, 5, 1), family_error);
    CHECK_THROWS_AS(theta_cover(3, 1, 5, 0), family_error);
    CHECK_THROWS_AS(theta_cover(4, 1, 5, 2), family_error);

    for (auto [alpha, beta, n, s] : std::vector<std::array<int64, 4>>{
             {3, 1, 5, 2}, {5, 3, 4, 2}, {5, 3, 7, 6}}) {
        auto rep = analyze_family(theta_cover(alpha, beta, n, s));
        CAPTURE(alpha, beta, n, s);
        for (const auto& c : rep.checks)
            if (c.name.rfind("family_", 0) == 0) CHECK(c.pass);
    }
}

TEST_CASE("torus knot covering cases") {
    auto fs1 = torus_knot_cover(1, {.k = 3, .q = 1}, 4);
    CHECK(fs1.params == validate_params(1, 1, 2, 4, 3, 3));
    CHECK(*fs1.upper_bound == 12);

    auto fs2 = torus_knot_cover(2, {.k = 3, .q = 2}, 3);
    CHECK(*fs2.upper_bound == 15);
    CHECK(fs2.params.a == 1);
    CHECK(fs2.params.b == 1);
    CHECK(fs2.params.c == 4);

    CHECK_THROWS_AS(torus_knot_cover(1, {.k = 1, .q = 1}, 3), family_error);
    CHECK_THROWS_AS(torus_knot_cover(2, {.k = 3, .q = 1}, 3), family_error);
    CHECK_THROWS_AS(torus_knot_cover(4, {.k = 3, .q = 1}, 3), family_error);

    auto rep1 = analyze_family(fs1);
    for (const auto& c : rep1.checks)
        if (c.name.rfind("family_", 0) == 0) CHECK(c.pass);
    auto rep2 = analyze_family(fs2);
    for (const auto& c : rep2.checks)
        if (c.name.rfind("family_", 0) == 0) CHECK(c.pass);

    // case 3 with the shift recovered from the homology oracle
    auto fs3 = torus_knot_cover(3, {.q = 1, .q1 = 1, .s = 2}, 3);
    CHECK(fs3.selected_s.has_value());
    auto rep3 = analyze_family(fs3);
    for (const auto& c : rep3.checks)
        if (c.name == "family_torsion_derived" || c.name == "family_h1_rank" ||
            c.name == "family_upper_bound_holds")
            CHECK(c.pass);
}

TEST_CASE("Seifert manifold parameters, torsion and bounds") {
    auto fs = seifert(2, 1, 1, 4);
    CHECK(fs.params == validate_params(1, 2, 0, 4, 1, 0));
    CHECK(*fs.upper_bound == 8);
    CHECK(*fs.torsion_order_formula == 8);     // classical closed form
    CHECK(*fs.torsion_order_derived == 16);  // direct abelianization

    auto fs2 = seifert(3, 2, 1, 3);
    CHECK(fs2.params == validate_params(1, 1, 2, 3, 1, 1));
    CHECK(*fs2.upper_bound == 9);
    CHECK(*fs2.torsion_order_derived == 27);

    auto rep = analyze_family(fs, {.assume_irreducible = true});
    CHECK(rep.complexity.c_tilde == 8);
    CHECK(rep.homology.torsion_order() == 16);
    for (const auto& c : rep.checks) {
        if (c.name == "family_torsion_derived" || c.name == "family_upper_bound_holds" ||
            c.name == "family_lower_below_engine")
            CHECK(c.pass);
        if (c.name == "family_torsion_formula") CHECK_FALSE(c.pass);
    }

    // degenerate classical form: (n-1)lq = p
    auto fs3 = seifert(3, 1, 1, 4);
    CHECK(*fs3.torsion_order_formula == 0);
    CHECK(*fs3.torsion_order_derived == 27);

    CHECK_THROWS_AS(seifert(2, 1, 1, 2), family_error);
    CHECK_THROWS_AS(seifert(2, 2, 1, 3), family_error);
    CHECK_THROWS_AS(seifert(1, 2, 1, 3), family_error);
}

TEST_CASE("closed-form upper bound by parameter case") {
    // abc > 0, generic twist
    CHECK(dunwoody_formula_bound(validate_params(1, 1, 1, 2, 1, 0)) == 2);
    CHECK(dunwoody_formula_bound(validate_params(1, 1, 1, 4, 1, 0)) == 8);
    // twist at -b: no formula
    CHECK_FALSE(dunwoody_formula_bound(validate_params(1, 1, 1, 3, 3, 0)));
    // twist next to -b
    CHECK(dunwoody_formula_bound(validate_params(1, 1, 1, 2, 0, 0)) == 3);
    // abc = 0 with min(a, b+c) > 0, large n
    CHECK(dunwoody_formula_bound(validate_params(2, 0, 1, 4, 2, 0)) == 12);
    // small-n rows with the k corrections
    CHECK(dunwoody_formula_bound(validate_params(2, 0, 1, 2, 1, 0)) == 4);
    CHECK(dunwoody_formula_bound(validate_params(2, 0, 1, 2, 2, 0)) == 2);
    // n = 1 carries no formula
    CHECK_FALSE(dunwoody_formula_bound(validate_params(1, 1, 1, 1, 1, 0)));

    // equivalence-invariance where both sides are defined, away from n = 2
    for (int64 a = 0; a <= 2; ++a)
        for (int64 b = 0; b <= 2; ++b)
            for (int64 c = 0; c <= 2; ++c) {
                if (2 * a + b + c == 0) continue;
                for (int64 n = 3; n <= 5; ++n)
                    for (int64 r = 0; r < 2 * a + b + c; ++r)
                        for (int64 s = 0; s < n; ++s) {
                            auto p = validate_params(a, b, c, n, r, s);
                            auto f1 = dunwoody_formula_bound(p);
                            auto f2 = dunwoody_formula_bound(equivalent_params(p));
                            if (f1 && f2) {
                                CAPTURE(a, b, c, n, r, s);
                                CHECK(*f1 == *f2);
                            }
                        }
            }
}
