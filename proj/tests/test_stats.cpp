#include <doctest.h>

#include <random>

#include "lepath/stats.hpp"
#include "oracles.hpp"

using namespace lepath;

TEST_CASE("point mass for a chain") {
    Poset p = Poset::from_relations(4, {{1, 2}, {2, 3}, {3, 4}});
    auto d = n_dist(p, 3);
    CHECK(d.table.size() == 1);
    CHECK(d.at(3) == 1);
}

TEST_CASE("pentagon N distribution at the middle element") {
    auto [p, cp] = oracle::pentagon();
    auto d = n_dist(p, 2);
    CHECK(d.at(2) == 1);
    CHECK(d.at(3) == 1);
    CHECK(d.at(4) == 1);
    CHECK(d.at(1) == 0);
}

TEST_CASE("distribution totals partition the extensions") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + (int)(rng() % 6);
        std::vector<std::pair<int, int>> rel;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 3 == 0) rel.emplace_back(u, v);
        Poset p = Poset::from_relations(n, rel);
        mpz_class e((long)p.count_extensions());
        for (int x = 1; x <= n; ++x) {
            mpz_class total = 0;
            for (const auto& [k, v] : n_dist(p, x).table) total += v;
            CHECK(total == e);
        }
        mpz_class ftotal = 0;
        for (const auto& [k, v] : f_dist(p, 1, 2).table) ftotal += v;
        CHECK(ftotal == e);
    }
}

TEST_CASE("the C3+C3 cross-chain q-tables") {
    auto [p, cp] = oracle::c3_plus_c3();
    auto fq = f_q_dist(p, cp, 1, 6);  // x = alpha_1, y = beta_3

    QPoly f1 = QPoly::monomial(14);
    QPoly f2 = QPoly::monomial(13, 2);
    QPoly f3 = QPoly::monomial(12, 3);
    f3.add_term(11, 1);
    CHECK(fq.at(1) == f1);
    CHECK(fq.at(2) == f2);
    CHECK(fq.at(3) == f3);

    QPoly diff = fq.at(2) * fq.at(2) - fq.at(1) * fq.at(3);
    QPoly expect = QPoly::monomial(26);
    expect.add_term(25, -1);
    CHECK(diff == expect);
    CHECK(!coeffwise_geq(diff, QPoly::zero()));
    CHECK(!coeffwise_geq(QPoly::zero(), diff));

    // At q = 1 the square equality holds: 1, 2, 4.
    CHECK(fq.at(1).eval_one() == 1);
    CHECK(fq.at(2).eval_one() == 2);
    CHECK(fq.at(3).eval_one() == 4);
    auto f = f_dist(p, 1, 6);
    CHECK(f.at(2) * f.at(2) == f.at(1) * f.at(3));
}

TEST_CASE("coeffwise_geq basics") {
    QPoly f = QPoly::monomial(3, 2);
    CHECK(coeffwise_geq(f, f));
    QPoly g = QPoly::monomial(26);
    QPoly h = QPoly::monomial(25);
    CHECK(!coeffwise_geq(g, h));
    CHECK(!coeffwise_geq(h, g));
    CHECK(coeffwise_geq(f + g, f));
}

TEST_CASE("reversed pair puts all mass at negative gaps") {
    Poset p = Poset::from_relations(3, {{1, 2}, {2, 3}});
    auto d = f_dist(p, 3, 1);
    CHECK(d.at(-2) == 1);
    for (const auto& [k, v] : d.table) CHECK(k < 0);
}

TEST_CASE("q-KS checker refuses cross-chain pairs") {
    auto [p, cp] = oracle::c3_plus_c3();
    CHECK_THROWS_AS(check_q_ks(p, cp, 1, 6), std::invalid_argument);
    CHECK_NOTHROW(check_q_ks(p, cp, 1, 3));
    CHECK_NOTHROW(check_q_ks(p, cp, 4, 6));
}

TEST_CASE("checkers hold on random small posets") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 15; ++t) {
        int n = 3 + (int)(rng() % 5);
        std::vector<std::pair<int, int>> rel;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 3 == 0) rel.emplace_back(u, v);
        Poset p = Poset::from_relations(n, rel);
        for (int x = 1; x <= n; ++x) CHECK(check_stanley(p, x).all_hold);
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                if (x != y) CHECK(check_ks(p, x, y).all_hold);
        auto cp = p.width2_partition();
        if (cp) {
            for (int x = 1; x <= n; ++x) CHECK(check_q_stanley(p, *cp, x).all_hold);
            for (int x : cp->c1)
                for (int y : cp->c1)
                    if (x != y) CHECK(check_q_ks(p, *cp, x, y).all_hold);
        }
    }
}

TEST_CASE("specialization chain: multivariate -> q -> counts") {
    auto [p, cp] = oracle::c3_plus_c3();
    for (int x : {1, 2, 3}) {
        auto mq = n_mq_dist(p, cp, x);
        auto q = n_q_dist(p, cp, x);
        auto c = n_dist(p, x);
        for (int k = 1; k <= 6; ++k) {
            CHECK(mq.at(k).to_qpoly() == q.at(k));
            CHECK(q.at(k).eval_one() == c.at(k));
        }
    }
    auto fmq = f_mq_dist(p, cp, 1, 3);
    auto fq = f_q_dist(p, cp, 1, 3);
    for (int k = -5; k <= 5; ++k) CHECK(fmq.at(k).to_qpoly() == fq.at(k));
}

TEST_CASE("multivariate totals at all-ones") {
    auto [p, cp] = oracle::pentagon();
    auto mq = n_mq_dist(p, cp, 2);
    mpz_class total = 0;
    for (const auto& [k, v] : mq.table) total += v.eval_all_ones();
    CHECK(total == (long)p.count_extensions());
}

TEST_CASE("f_q_level sums to f_q_dist") {
    auto [p, cp] = oracle::c3_plus_c3();
    for (int x : {1, 4})
        for (int y : {3, 6}) {
            auto fq = f_q_dist(p, cp, x, y);
            for (int k = 1; k <= 5; ++k) {
                QPoly total;
                for (int w = 1; w <= 6; ++w) total += f_q_level(p, cp, x, y, w, k);
                CHECK(total == fq.at(k));
            }
        }
}

TEST_CASE("adjoining a maximum turns F into a shifted N") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + (int)(rng() % 5);
        std::vector<std::pair<int, int>> rel;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 3 == 0) rel.emplace_back(u, v);
        Poset p = Poset::from_relations(n, rel);
        Poset top = p.with_maximum();
        for (int x = 1; x <= n; ++x) {
            auto f = f_dist(top, x, n + 1);
            auto nd = n_dist(p, x);
            for (int k = 1; k <= n; ++k) CHECK(f.at(k) == nd.at(n + 1 - k));
        }
    }
}

TEST_CASE("distribution support is a contiguous interval") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 25; ++t) {
        int n = 3 + (int)(rng() % 5);
        std::vector<std::pair<int, int>> rel;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 3 == 0) rel.emplace_back(u, v);
        Poset p = Poset::from_relations(n, rel);
        auto contiguous = [](const std::map<int, mpz_class>& tab) {
            if (tab.empty()) return true;
            int lo = tab.begin()->first, hi = tab.rbegin()->first;
            return (int)tab.size() == hi - lo + 1;
        };
        for (int x = 1; x <= n; ++x) CHECK(contiguous(n_dist(p, x).table));
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                if (x != y) CHECK(contiguous(f_dist(p, x, y).table));
    }
}

TEST_CASE("large width-two posets go through the region counting path") {
    // 30 elements: two chains with a few crossings; enumeration would be
    // astronomically large.
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i < 15; ++i) rel.emplace_back(i, i + 1);
    for (int i = 16; i < 30; ++i) rel.emplace_back(i, i + 1);
    rel.emplace_back(1, 20);
    rel.emplace_back(18, 9);
    Poset p = Poset::from_relations(30, rel);
    ChainPartition cp;
    for (int i = 1; i <= 15; ++i) cp.c1.push_back(i);
    for (int i = 16; i <= 30; ++i) cp.c2.push_back(i);
    auto nq = n_q_dist(p, cp, 8);
    mpz_class total = 0;
    for (const auto& [k, v] : nq.table) total += v.eval_one();
    auto nd = n_dist(p, 8);
    mpz_class total2 = 0;
    for (const auto& [k, v] : nd.table) total2 += v;
    CHECK(total == total2);
    CHECK(total > 1000000);
    CHECK(check_q_ks(p, cp, 3, 9).all_hold);
}
