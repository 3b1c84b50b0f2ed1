#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace dunwoody;

TEST_CASE("a bouquet admits exactly the empty forest") {
    // reduced knot covering: no curves to remove
    auto cd = build_diagram(validate_params(2, 0, 1, 3, 1, 0));
    auto g = dual_graph_of(cd, curve_system::csecond);
    auto forests = admissible_forests(g);
    REQUIRE(forests.size() == 1);
    CHECK(forests[0].curves.empty());
}

TEST_CASE("link covering dual graph and its spanning trees") {
    auto cd = build_diagram(validate_params(1, 2, 1, 4, 3, 2));  // b(4,1), n=4, s=2
    auto g = dual_graph_of(cd, curve_system::csecond);
    CHECK(g.vertex_count == 3);
    CHECK(g.positive_vertices.empty());
    auto forests = admissible_forests(g);
    CHECK(!forests.empty());
    // spanning trees over the 3 planar pieces; the short radial curves come
    // out as loops here, so every tree is a pair of long curves
    for (const auto& f : forests) {
        REQUIRE(f.curves.size() == 2);
        for (int64 id : f.curves)
            CHECK(cd.csecond[static_cast<size_t>(id)].crossings() == 4);
    }
}

TEST_CASE("theta covering: positive pieces force the empty forest") {
    auto cd = build_diagram(validate_params(1, 1, 1, 5, 3, 2));
    auto g = dual_graph_of(cd, curve_system::csecond);
    REQUIRE(g.positive_vertices.size() == 2);
    auto forests = admissible_forests(g);
    REQUIRE(forests.size() == 1);
    CHECK(forests[0].curves.empty());
}

TEST_CASE("forest sizes follow the tree structure") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        auto p = testsupport::random_cellular_params(rng, 2, 4);
        auto cd = build_diagram(p);
        auto g = dual_graph_of(cd, curve_system::csecond);
        std::vector<admissible_forest> forests;
        try {
            forests = admissible_forests(g, 20000);
        } catch (const forest_cap_exceeded&) {
            continue;
        }
        int64 expected = g.positive_vertices.empty()
                             ? g.vertex_count - 1
                             : g.vertex_count - static_cast<int64>(g.positive_vertices.size());
        for (const auto& f : forests) {
            CHECK(static_cast<int64>(f.curves.size()) == expected);
            // the reduced sub-diagram classifies as reduced
            auto cls = classify(reduce(cd, f), curve_system::csecond);
            CHECK(cls.reduced);
        }
    }
}

TEST_CASE("reduction bookkeeping") {
    auto cd = build_diagram(validate_params(1, 2, 1, 2, 3, 1));  // b(4,1), n=2, s=1
    auto g = dual_graph_of(cd, curve_system::csecond);
    auto forests = admissible_forests(g);
    REQUIRE(!forests.empty());
    for (const auto& f : forests) {
        auto red = reduce(cd, f);
        int64 removed = 0;
        for (int64 id : f.curves) removed += cd.csecond[static_cast<size_t>(id)].crossings();
        CHECK(singular_count(red) == singular_count(cd) - removed);
        CHECK(genus_of(red) == genus_of(cd));
    }
    // removing the empty forest is the identity
    auto same = reduce(cd, admissible_forest{});
    CHECK(singular_count(same) == singular_count(cd));
    CHECK(same.csecond_active == cd.csecond_active);
}

TEST_CASE("the enumeration cap falls back to a greedy bound") {
    auto cd = build_diagram(validate_params(1, 2, 1, 4, 3, 2));
    auto g = dual_graph_of(cd, curve_system::csecond);
    CHECK_THROWS_AS(admissible_forests(g, 1), forest_cap_exceeded);

    auto exact = modified_complexity(cd);
    auto capped = modified_complexity(cd, {1, false});
    CHECK(capped.mode == complexity_mode::greedy_bound);
    CHECK(exact.mode == complexity_mode::exact);
    CHECK(capped.c_tilde >= exact.c_tilde);  // greedy result only bounds ctilde from above

    auto forced = modified_complexity(cd, {default_forest_cap, true});
    CHECK(forced.mode == complexity_mode::greedy_bound);
    CHECK(forced.c_tilde >= exact.c_tilde);
}

TEST_CASE("greedy forest on a weighted link diagram is admissible") {
    auto cd = build_diagram(validate_params(3, 2, 1, 4, 1, 2));
    auto g = dual_graph_of(cd, curve_system::csecond);
    std::vector<int64> w(cd.csecond.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = cd.csecond[i].crossings();
    auto f = greedy_admissible_forest(g, w);
    auto cls = classify(reduce(cd, f), curve_system::csecond);
    CHECK(cls.reduced);
}
