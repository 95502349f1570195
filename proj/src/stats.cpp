#include "lepath/stats.hpp"

#include <stdexcept>

namespace lepath {

namespace {

constexpr int kEnumLimit = 12;

void internal_check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(what);
}

// Where the forced step of "element z gets rank t" sits in the grid.
struct Anchor {
    GridPoint at;
    bool east;
    GridPoint after;
    long exp;  // q-exponent of the forced step (0 for North)
};

Anchor anchor_of(const ChainPartition& cp, int z, int t) {
    int pos = cp.position(z);
    if (pos == 0) throw std::invalid_argument("element not covered by the chain partition");
    Anchor a;
    if (pos > 0) {
        a.at = {pos - 1, t - pos};
        a.east = true;
        a.after = a.at + kEast;
        a.exp = t;
    } else {
        int m = -pos;
        a.at = {t - m, m - 1};
        a.east = false;
        a.after = a.at + kNorth;
        a.exp = 0;
    }
    return a;
}

QPoly anchor_step_q(const Anchor& a) {
    return a.east ? QPoly::monomial(a.exp) : QPoly::one();
}

MultiPoly anchor_step_mq(const Anchor& a, int arity) {
    MultiPoly m(arity);
    std::vector<int> e(arity, 0);
    if (!a.east && a.at.x < arity) e[a.at.x] = 1;  // North step on column x feeds q_{x+1}
    m.add_term(e, 1);
    return m;
}

QPoly n_q_at(const Region& r, const ChainPartition& cp, int x, int k) {
    Anchor a = anchor_of(cp, x, k);
    GridPoint origin{0, 0}, Q{r.a(), r.b()};
    return count_paths_q(r, origin, a.at) * anchor_step_q(a) * count_paths_q(r, a.after, Q);
}

QPoly f_q_at(const Region& r, const ChainPartition& cp, int x, int y, int tx, int ty) {
    Anchor ax = anchor_of(cp, x, tx), ay = anchor_of(cp, y, ty);
    const Anchor& first = tx < ty ? ax : ay;
    const Anchor& second = tx < ty ? ay : ax;
    GridPoint origin{0, 0}, Q{r.a(), r.b()};
    QPoly head = count_paths_q(r, origin, first.at);
    if (head.is_zero()) return head;
    QPoly mid = count_paths_q(r, first.after, second.at);
    if (mid.is_zero()) return mid;
    QPoly tail = count_paths_q(r, second.after, Q);
    if (tail.is_zero()) return tail;
    return head * anchor_step_q(first) * mid * anchor_step_q(second) * tail;
}

MultiPoly mq_base(int arity) {
    MultiPoly m(arity);
    m.add_term(std::vector<int>(arity, 1), 1);
    return m;
}

MultiPoly n_mq_at(const Region& r, const ChainPartition& cp, int x, int k) {
    int arity = cp.a();
    Anchor a = anchor_of(cp, x, k);
    GridPoint origin{0, 0}, Q{r.a(), r.b()};
    return mq_base(arity) * count_paths_mq(r, arity, origin, a.at) * anchor_step_mq(a, arity) *
           count_paths_mq(r, arity, a.after, Q);
}

MultiPoly f_mq_at(const Region& r, const ChainPartition& cp, int x, int y, int tx, int ty) {
    int arity = cp.a();
    Anchor ax = anchor_of(cp, x, tx), ay = anchor_of(cp, y, ty);
    const Anchor& first = tx < ty ? ax : ay;
    const Anchor& second = tx < ty ? ay : ax;
    GridPoint origin{0, 0}, Q{r.a(), r.b()};
    MultiPoly head = count_paths_mq(r, arity, origin, first.at);
    if (head.is_zero()) return head;
    MultiPoly mid = count_paths_mq(r, arity, first.after, second.at);
    if (mid.is_zero()) return mid;
    MultiPoly tail = count_paths_mq(r, arity, second.after, Q);
    if (tail.is_zero()) return tail;
    return mq_base(arity) * head * anchor_step_mq(first, arity) * mid *
           anchor_step_mq(second, arity) * tail;
}

}  // namespace

MultiPoly count_paths_mq(const Region& r, int arity, const GridPoint& A, const GridPoint& B) {
    MultiPoly zero(arity);
    if (B.x < A.x || B.y < A.y || !r.contains(A) || !r.contains(B)) return zero;
    MultiPoly one(arity);
    one.add_term(std::vector<int>(arity, 0), 1);

    int w = B.y - A.y;
    std::vector<MultiPoly> dp(w + 1, zero);
    dp[0] = one;
    auto north_factor = [&](int x) {
        MultiPoly m(arity);
        std::vector<int> e(arity, 0);
        if (x < arity) e[x] = 1;
        m.add_term(e, 1);
        return m;
    };
    for (int y = A.y + 1; y <= B.y; ++y)
        dp[y - A.y] = r.contains({A.x, y}) ? dp[y - A.y - 1] * north_factor(A.x) : zero;
    for (int x = A.x + 1; x <= B.x; ++x) {
        std::vector<MultiPoly> next(w + 1, zero);
        for (int y = A.y; y <= B.y; ++y) {
            if (!r.contains({x, y})) continue;
            MultiPoly v = dp[y - A.y];  // East step, no factor
            if (y > A.y) v += next[y - A.y - 1] * north_factor(x);
            next[y - A.y] = std::move(v);
        }
        dp = std::move(next);
    }
    return dp[w];
}

std::vector<int> mq_exponents(const ChainPartition& cp, const LinearExtension& L) {
    std::vector<int> e(cp.a());
    int prev = 0;
    for (int i = 0; i < cp.a(); ++i) {
        e[i] = L.rank(cp.c1[i]) - prev;
        prev = L.rank(cp.c1[i]);
    }
    return e;
}

CountDist n_dist(const Poset& p, int x) {
    p.check_ids(x);
    CountDist d;
    d.kind = 'N';
    d.x = x;
    if (p.size() <= kEnumLimit) {
        p.for_each_extension([&](const LinearExtension& L) {
            d.table[L.rank(x)] += 1;
            return true;
        });
        return d;
    }
    auto cp = p.width2_partition();
    if (!cp) throw std::invalid_argument("poset too large for enumeration and width exceeds two");
    Region r = region_of(p, *cp);
    for (int k = 1; k <= p.size(); ++k) {
        Anchor a = anchor_of(*cp, x, k);
        mpz_class c = count_paths(r, {0, 0}, a.at) * count_paths(r, a.after, {r.a(), r.b()});
        if (c != 0) d.table[k] = c;
    }
    return d;
}

CountDist f_dist(const Poset& p, int x, int y) {
    p.check_ids(x);
    p.check_ids(y);
    if (x == y) throw std::invalid_argument("f_dist requires distinct elements");
    CountDist d;
    d.kind = 'F';
    d.x = x;
    d.y = y;
    if (p.size() <= kEnumLimit) {
        p.for_each_extension([&](const LinearExtension& L) {
            d.table[L.rank(y) - L.rank(x)] += 1;
            return true;
        });
        return d;
    }
    auto cp = p.width2_partition();
    if (!cp) throw std::invalid_argument("poset too large for enumeration and width exceeds two");
    Region r = region_of(p, *cp);
    int n = p.size();
    for (int k = -(n - 1); k <= n - 1; ++k) {
        if (k == 0) continue;
        mpz_class c = 0;
        for (int tx = 1; tx <= n; ++tx) {
            int ty = tx + k;
            if (ty < 1 || ty > n) continue;
            Anchor ax = anchor_of(*cp, x, tx), ay = anchor_of(*cp, y, ty);
            const Anchor& first = tx < ty ? ax : ay;
            const Anchor& second = tx < ty ? ay : ax;
            c += count_paths(r, {0, 0}, first.at) * count_paths(r, first.after, second.at) *
                 count_paths(r, second.after, {r.a(), r.b()});
        }
        if (c != 0) d.table[k] = c;
    }
    return d;
}

QDist n_q_dist(const Poset& p, const ChainPartition& cp, int x) {
    p.check_ids(x);
    cp.validate(p);
    QDist d;
    d.kind = 'N';
    d.x = x;
    Region r = region_of(p, cp);
    for (int k = 1; k <= p.size(); ++k) {
        QPoly v = n_q_at(r, cp, x, k);
        if (!v.is_zero()) d.table[k] = std::move(v);
    }
    if (p.size() <= kEnumLimit) {
        QDist e;
        p.for_each_extension([&](const LinearExtension& L) {
            e.table[L.rank(x)].add_term(wgt(cp, L), 1);
            return true;
        });
        internal_check(e.table == d.table, "n_q_dist: enumeration and path counting disagree");
    }
    return d;
}

QDist f_q_dist(const Poset& p, const ChainPartition& cp, int x, int y) {
    p.check_ids(x);
    p.check_ids(y);
    if (x == y) throw std::invalid_argument("f_q_dist requires distinct elements");
    cp.validate(p);
    QDist d;
    d.kind = 'F';
    d.x = x;
    d.y = y;
    Region r = region_of(p, cp);
    int n = p.size();
    for (int k = -(n - 1); k <= n - 1; ++k) {
        if (k == 0) continue;
        QPoly v;
        for (int tx = 1; tx <= n; ++tx) {
            int ty = tx + k;
            if (ty < 1 || ty > n) continue;
            v += f_q_at(r, cp, x, y, tx, ty);
        }
        if (!v.is_zero()) d.table[k] = std::move(v);
    }
    if (p.size() <= kEnumLimit) {
        QDist e;
        p.for_each_extension([&](const LinearExtension& L) {
            e.table[L.rank(y) - L.rank(x)].add_term(wgt(cp, L), 1);
            return true;
        });
        internal_check(e.table == d.table, "f_q_dist: enumeration and path counting disagree");
    }
    return d;
}

MqDist n_mq_dist(const Poset& p, const ChainPartition& cp, int x) {
    p.check_ids(x);
    cp.validate(p);
    MqDist d;
    d.kind = 'N';
    d.x = x;
    Region r = region_of(p, cp);
    for (int k = 1; k <= p.size(); ++k) {
        MultiPoly v = n_mq_at(r, cp, x, k);
        if (!v.is_zero()) d.table[k] = std::move(v);
    }
    if (p.size() <= kEnumLimit) {
        MqDist e;
        p.for_each_extension([&](const LinearExtension& L) {
            auto& cell = e.table[L.rank(x)];
            if (cell.arity() != cp.a()) cell = MultiPoly(cp.a());
            cell.add_term(mq_exponents(cp, L), 1);
            return true;
        });
        internal_check(e.table == d.table, "n_mq_dist: enumeration and path counting disagree");
    }
    return d;
}

MqDist f_mq_dist(const Poset& p, const ChainPartition& cp, int x, int y) {
    p.check_ids(x);
    p.check_ids(y);
    if (x == y) throw std::invalid_argument("f_mq_dist requires distinct elements");
    cp.validate(p);
    MqDist d;
    d.kind = 'F';
    d.x = x;
    d.y = y;
    Region r = region_of(p, cp);
    int n = p.size();
    for (int k = -(n - 1); k <= n - 1; ++k) {
        if (k == 0) continue;
        MultiPoly v(cp.a());
        for (int tx = 1; tx <= n; ++tx) {
            int ty = tx + k;
            if (ty < 1 || ty > n) continue;
            v += f_mq_at(r, cp, x, y, tx, ty);
        }
        if (!v.is_zero()) d.table[k] = std::move(v);
    }
    if (p.size() <= kEnumLimit) {
        MqDist e;
        p.for_each_extension([&](const LinearExtension& L) {
            auto& cell = e.table[L.rank(y) - L.rank(x)];
            if (cell.arity() != cp.a()) cell = MultiPoly(cp.a());
            cell.add_term(mq_exponents(cp, L), 1);
            return true;
        });
        internal_check(e.table == d.table, "f_mq_dist: enumeration and path counting disagree");
    }
    return d;
}

QPoly f_q_level(const Poset& p, const ChainPartition& cp, int x, int y, int w, int k) {
    p.check_ids(x);
    p.check_ids(y);
    cp.validate(p);
    Region r = region_of(p, cp);
    int ty = w + k;
    if (w < 1 || w > p.size() || ty < 1 || ty > p.size() || ty == w) return QPoly::zero();
    QPoly v = f_q_at(r, cp, x, y, w, ty);
    if (p.size() <= kEnumLimit) {
        QPoly e;
        p.for_each_extension([&](const LinearExtension& L) {
            if (L.rank(x) == w && L.rank(y) == ty) e.add_term(wgt(cp, L), 1);
            return true;
        });
        internal_check(e == v, "f_q_level: enumeration and path counting disagree");
    }
    return v;
}

bool coeffwise_geq(const QPoly& f, const QPoly& g) { return (f - g).is_nonneg(); }

bool coeffwise_geq(const MultiPoly& f, const MultiPoly& g) {
    if (f.arity() != g.arity() && !f.is_zero() && !g.is_zero())
        throw std::invalid_argument("coeffwise_geq: arity mismatch");
    return (f - g).is_nonneg();
}

int same_chain(const ChainPartition& cp, int x, int y) {
    int px = cp.position(x), py = cp.position(y);
    if (px > 0 && py > 0) return 1;
    if (px < 0 && py < 0) return 2;
    return 0;
}

namespace {

template <class V>
CheckReport<V> log_concavity_report(const std::map<int, V>& table, int kmin, int kmax) {
    CheckReport<V> rep;
    auto at = [&](int k) {
        auto it = table.find(k);
        return it == table.end() ? V{} : it->second;
    };
    for (int k = kmin; k <= kmax; ++k) {
        V diff = at(k) * at(k) - at(k - 1) * at(k + 1);
        bool ok;
        if constexpr (std::is_same_v<V, mpz_class>) ok = diff >= 0;
        else ok = diff.is_nonneg();
        rep.holds[k] = ok;
        rep.all_hold = rep.all_hold && ok;
        rep.differences[k] = std::move(diff);
    }
    return rep;
}

template <class V>
int f_report_kmax(const std::map<int, V>& table) {
    int kmax = 1;
    for (const auto& [k, v] : table)
        if (k >= 1) kmax = std::max(kmax, k + 1);
    return kmax;
}

}  // namespace

CheckReport<mpz_class> check_stanley(const Poset& p, int x) {
    return log_concavity_report(n_dist(p, x).table, 2, p.size());
}

CheckReport<mpz_class> check_ks(const Poset& p, int x, int y) {
    auto d = f_dist(p, x, y);
    return log_concavity_report(d.table, 2, f_report_kmax(d.table));
}

CheckReport<QPoly> check_q_stanley(const Poset& p, const ChainPartition& cp, int x) {
    return log_concavity_report(n_q_dist(p, cp, x).table, 2, p.size());
}

CheckReport<QPoly> check_q_ks(const Poset& p, const ChainPartition& cp, int x, int y) {
    if (same_chain(cp, x, y) == 0)
        throw std::invalid_argument(
            "q-Kahn-Saks requires x and y in the same chain: for cross-chain pairs the "
            "coefficientwise inequality can fail (C3+C3 with x=alpha_1, y=beta_3 has "
            "F_q(2)^2 - F_q(1)F_q(3) = q^26 - q^25, not >= 0)");
    auto d = f_q_dist(p, cp, x, y);
    return log_concavity_report(d.table, 2, f_report_kmax(d.table));
}

CheckReport<MultiPoly> check_mq_stanley(const Poset& p, const ChainPartition& cp, int x) {
    if (cp.position(x) <= 0)
        throw std::invalid_argument("multivariate Stanley check requires x in the first chain");
    return log_concavity_report(n_mq_dist(p, cp, x).table, 2, p.size());
}

CheckReport<MultiPoly> check_mq_ks(const Poset& p, const ChainPartition& cp, int x, int y) {
    if (cp.position(x) <= 0 || cp.position(y) <= 0)
        throw std::invalid_argument(
            "multivariate Kahn-Saks check requires both elements in the first chain");
    auto d = f_mq_dist(p, cp, x, y);
    return log_concavity_report(d.table, 2, f_report_kmax(d.table));
}

}  // namespace lepath
