#include <doctest.h>

#include <set>

#include "lepath/path_calc.hpp"
#include "oracles.hpp"

using namespace lepath;

TEST_CASE("count_paths_q basics") {
    Region full = Region::full_rectangle(2, 2);
    CHECK(count_paths_q(full, {1, 1}, {1, 1}) == QPoly::one());
    CHECK(count_paths(full, {0, 0}, {2, 2}) == 6);
    CHECK(count_paths_q(full, {2, 2}, {0, 0}).is_zero());
    CHECK(count_paths_q(full, {0, 0}, {3, 0}).is_zero());  // outside
}

TEST_CASE("count_paths_q equals the walk oracle everywhere") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 6; ++b)
            enumerate_regions(a, b, [&](const Region& r) {
                for (int x0 = 0; x0 <= a; ++x0)
                    for (int y0 = r.col_lo(x0); y0 <= r.col_hi(x0); ++y0)
                        for (int x1 = x0; x1 <= a; ++x1)
                            for (int y1 = y0; y1 <= r.col_hi(x1); ++y1) {
                                GridPoint A{x0, y0}, B{x1, y1};
                                if (!r.contains(B)) continue;
                                CHECK(count_paths_q(r, A, B) == oracle::qcount_by_walk(r, A, B));
                            }
                return true;
            });
}

TEST_CASE("weights are additive under concatenation") {
    Region r = Region::full_rectangle(3, 3);
    for (const NEPath& p : oracle::paths_by_walk(r, {0, 0}, {3, 3})) {
        GridPoint mid = p.point_at(3);
        CHECK(oracle::segment_weight(p) == oracle::segment_weight(p.prefix_to(mid)) +
                                               oracle::segment_weight(p.suffix_from(mid)));
    }
}

TEST_CASE("concatenation inequality: through-point counts are dominated") {
    Region r = Region::from_east_heights(2, 2, {0, 1}, {1, 2});
    GridPoint A{0, 0}, C{2, 2};
    QPoly direct = count_paths_q(r, A, C);
    for (int x = 0; x <= 2; ++x)
        for (int y = r.col_lo(x); y <= r.col_hi(x); ++y) {
            GridPoint B{x, y};
            QPoly through = count_paths_q(r, A, B) * count_paths_q(r, B, C);
            CHECK((direct - through).is_nonneg());
            // equality iff every path passes through B
            long long cnt = 0;
            for (const NEPath& p : oracle::paths_by_walk(r, A, C))
                if (p.contains_point(B)) ++cnt;
            bool all = mpz_class((long)cnt) == direct.eval_one();
            CHECK((through == direct) == all);
        }
}

TEST_CASE("transposition symmetry at q=1") {
    enumerate_regions(3, 2, [&](const Region& r) {
        Region t = r.transposed();
        CHECK(count_paths(r, {0, 0}, {3, 2}) == count_paths(t, {0, 0}, {2, 3}));
        return true;
    });
}

TEST_CASE("kappa identity when the translation is zero") {
    Region r = Region::full_rectangle(3, 3);
    PairGeometry g{{0, 2}, {0, 2}, {0, 0}, {0, 0}, {3, 3}, {3, 2}};
    for (const NEPath& gamma : oracle::paths_by_walk(r, g.A, g.C))
        for (const NEPath& delta : oracle::paths_by_walk(r, g.B, g.D)) {
            auto [g2, d2] = kappa(r, g, gamma, delta);
            CHECK(g2 == gamma);
            CHECK(d2 == delta);
        }
}

TEST_CASE("kappa is injective and preserves weight sums on a full rectangle") {
    Region r = Region::full_rectangle(3, 3);
    PairGeometry g{{0, 2}, {0, 1}, {0, 0}, {0, 1}, {3, 3}, {3, 3}};
    std::set<std::string> images;
    int domain = 0;
    for (const NEPath& gamma : oracle::paths_by_walk(r, g.A, g.C))
        for (const NEPath& delta : oracle::paths_by_walk(r, g.B, g.D)) {
            ++domain;
            auto [g2, d2] = kappa(r, g, gamma, delta);
            CHECK(g2.start() == g.Ap);
            CHECK(g2.end() == g.C);
            CHECK(d2.start() == g.Bp);
            CHECK(d2.end() == g.D);
            CHECK(r.contains_path(g2));
            CHECK(r.contains_path(d2));
            CHECK(oracle::segment_weight(gamma) + oracle::segment_weight(delta) ==
                  oracle::segment_weight(g2) + oracle::segment_weight(d2));
            CHECK(images.insert(g2.steps() + "|" + d2.steps()).second);
        }
    CHECK(domain > 0);
    CHECK((int)images.size() == domain);
}

TEST_CASE("kappa rejects broken geometry") {
    Region r = Region::full_rectangle(2, 2);
    // A below A' violates the ordering.
    PairGeometry g{{0, 0}, {0, 1}, {0, 0}, {0, -1}, {2, 2}, {2, 2}};
    NEPath gamma({0, 0}, "EENN"), delta({0, 0}, "EENN");
    CHECK_THROWS_WITH_AS(kappa(r, g, gamma, delta), "geometry mismatch", std::invalid_argument);
}

TEST_CASE("check_lemma_pairs difference is nonnegative; zero RHS is trivial") {
    Region r = Region::from_east_heights(3, 3, {0, 0, 2}, {1, 3, 3});
    PairGeometry g{{0, 1}, {0, 0}, {0, 0}, {0, 1}, {2, 3}, {2, 1}};
    // K(A,C) may vanish; the difference must still be >= 0.
    auto ev = check_lemma_pairs(r, g);
    CHECK(ev.diff.is_nonneg());
    CHECK(ev.lhs == count_paths_q(r, g.Ap, g.C) * count_paths_q(r, g.Bp, g.D));
}

TEST_CASE("criss-cross with zero shift cancels exactly") {
    Region r = Region::full_rectangle(3, 3);
    QPoly d = criss_cross_delta2(r, {0, 2}, {0, 2}, {0, 0}, {0, 0}, {3, 3}, {3, 3}, {3, 1},
                                 {3, 1});
    CHECK(d.is_zero());
}

TEST_CASE("criss-cross nonnegative on an exhaustive small sweep") {
    enumerate_regions(2, 2, [&](const Region& r) {
        for (int xl = 0; xl <= 2; ++xl)
            for (int ya = r.col_lo(xl); ya <= r.col_hi(xl); ++ya)
                for (int yb = r.col_lo(xl); yb <= ya; ++yb)
                    for (int t = 0; t <= ya - yb; ++t)
                        for (int xr = xl; xr <= 2; ++xr)
                            for (int yc = r.col_lo(xr); yc <= r.col_hi(xr); ++yc) {
                                int yd = yc - (ya - yb);
                                GridPoint A{xl, ya}, Ap{xl, ya - t}, B{xl, yb}, Bp{xl, yb + t};
                                GridPoint C{xr, yc}, Cp{xr, yc - t}, D{xr, yd}, Dp{xr, yd + t};
                                if (!r.contains(C) || !r.contains(Cp) || !r.contains(D) ||
                                    !r.contains(Dp))
                                    continue;
                                QPoly d2 = criss_cross_delta2(r, A, Ap, B, Bp, C, Cp, D, Dp);
                                CHECK(d2.is_nonneg());
                            }
        return true;
    });
}

TEST_CASE("forced point cases") {
    // Full rectangle, strict inequality: no forced point.
    Region full = Region::full_rectangle(2, 1);
    CHECK(!forced_point(full, {0, 1}, {0, 0}, {2, 1}, {2, 0}).has_value());

    // Region pinched to a single point in the middle column.
    Region pinched = Region::from_east_heights(2, 2, {0, 2}, {2, 2});
    auto fp = forced_point(pinched, {0, 2}, {0, 0}, {2, 2}, {2, 2});
    REQUIRE(fp.has_value());
    CHECK(fp->point == GridPoint{1, 2});
    CHECK(fp->tag == ForcedCase::Pinch);

    // Single-path region: every point is forced; the crossed products agree.
    Region single = Region::from_east_heights(1, 1, {1}, {1});
    auto fp2 = forced_point(single, {0, 1}, {0, 0}, {1, 1}, {1, 1});
    REQUIRE(fp2.has_value());
}

TEST_CASE("s_term: direct equals regrouped and both vanish off support") {
    // C3+C3: x=alpha1, y=alpha3 (s=1, r=2).
    auto [p, cp] = oracle::c3_plus_c3();
    Region r = region_of(p, cp);
    LevelAnchors an{1, 2};
    for (int k = 2; k <= 4; ++k)
        for (int w = 0; w <= 7; ++w)
            for (int u = w - 1; u <= 7; ++u) {
                STerm st = s_term(r, an, k, u, w);
                CHECK(st.direct == st.regrouped);
                CHECK(st.direct.is_nonneg());
            }
    // All four factors zero far outside the support.
    STerm far = s_term(r, an, 2, 40, 40);
    CHECK(far.direct.is_zero());
    CHECK(far.regrouped.is_zero());
}

TEST_CASE("s_term grouping reproduces the log-concavity difference") {
    auto [p, cp] = oracle::c3_plus_c3();
    Region r = region_of(p, cp);
    LevelAnchors an{1, 2};
    int k = 2;
    // Delta from the enumeration oracle.
    QPoly fk, fkm, fkp;
    for (const LinearExtension& L : p.extensions()) {
        int gap = L.rank(3) - L.rank(1);
        long w = wgt(cp, L);
        if (gap == k) fk.add_term(w, 1);
        if (gap == k - 1) fkm.add_term(w, 1);
        if (gap == k + 1) fkp.add_term(w, 1);
    }
    QPoly delta = fk * fk - fkm * fkp;
    QPoly sum;
    for (int w = 0; w <= 7; ++w) {
        // the u = w-1 boundary term enters halved
        STerm boundary = s_term(r, an, k, w - 1, w);
        QPoly half;
        for (const auto& [e, c] : boundary.direct.terms()) half.add_term(e, c / 2);
        sum += half;
        for (int u = w; u <= 7; ++u) sum += s_term(r, an, k, u, w).direct;
    }
    CHECK(sum == delta);
    CHECK(delta.is_nonneg());
}

TEST_CASE("f_level_q matches enumeration on C3+C3") {
    auto [p, cp] = oracle::c3_plus_c3();
    Region r = region_of(p, cp);
    LevelAnchors an{1, 2};
    for (int w = 1; w <= 6; ++w)
        for (int k = 1; k <= 5; ++k) {
            QPoly expect;
            for (const LinearExtension& L : p.extensions())
                if (L.rank(1) == w && L.rank(3) == w + k) expect.add_term(wgt(cp, L), 1);
            CHECK(f_level_q(r, an, w, k) == expect);
        }
}
