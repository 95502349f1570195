#include <doctest.h>

#include <set>

#include "lepath/generators.hpp"
#include "oracles.hpp"

using namespace lepath;

TEST_CASE("isomorphism classes match the known counts") {
    auto classes = poset_classes_up_to(7);
    CHECK(classes[1].size() == 1);
    CHECK(classes[2].size() == 2);
    CHECK(classes[3].size() == 5);
    CHECK(classes[4].size() == 16);
    CHECK(classes[5].size() == 63);
    CHECK(classes[6].size() == 318);
    CHECK(classes[7].size() == 2045);
}

TEST_CASE("class representatives are pairwise non-isomorphic") {
    auto classes = poset_classes_up_to(5);
    for (int n = 1; n <= 5; ++n)
        for (size_t i = 0; i < classes[n].size(); ++i)
            for (size_t j = i + 1; j < classes[n].size(); ++j)
                CHECK(!posets_isomorphic(classes[n][i], classes[n][j]));
}

TEST_CASE("isomorphism test on relabelings") {
    Poset p = Poset::from_relations(5, {{1, 2}, {2, 3}, {4, 5}, {1, 4}});
    // relabel via the permutation (1 5)(2 4)
    Poset q = Poset::from_relations(5, {{5, 4}, {4, 3}, {2, 1}, {5, 2}});
    CHECK(posets_isomorphic(p, q));
    Poset r = Poset::from_relations(5, {{1, 2}, {2, 3}, {4, 5}});
    CHECK(!posets_isomorphic(p, r));
}

TEST_CASE("order ideals") {
    Poset chain = Poset::from_relations(3, {{1, 2}, {2, 3}});
    auto ideals = order_ideals(chain);
    CHECK(ideals.size() == 4);  // prefixes only
    Poset anti = Poset::from_relations(3, {});
    CHECK(order_ideals(anti).size() == 8);
}

TEST_CASE("generation is deterministic") {
    auto a = poset_classes_up_to(5);
    auto b = poset_classes_up_to(5);
    for (int n = 1; n <= 5; ++n) {
        REQUIRE(a[n].size() == b[n].size());
        for (size_t i = 0; i < a[n].size(); ++i) CHECK(a[n][i] == b[n][i]);
    }
}

TEST_CASE("random posets are valid and seeded deterministically") {
    std::mt19937_64 r1(99), r2(99);
    for (int t = 0; t < 20; ++t) {
        Poset a = random_poset(r1, 8);
        Poset b = random_poset(r2, 8);
        CHECK(a == b);
        for (int u = 1; u <= 8; ++u) CHECK(!a.less(u, u));
    }
}

TEST_CASE("random regions are valid noncrossing pairs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        Region r = random_region(rng, 5, 4);
        auto lo = r.lower().east_heights(), hi = r.upper().east_heights();
        for (int i = 0; i < 5; ++i) CHECK(lo[i] <= hi[i]);
    }
}
